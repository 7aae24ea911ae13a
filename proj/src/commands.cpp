#include "kzrat/commands.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/scalar_text.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace kzrat {

namespace {

bool numeric(const RunConfig& config) { return config.z1 || config.z2; }

std::string mode_name(const RunConfig& config) { return numeric(config) ? "numeric" : "symbolic"; }

std::vector<SeedName> selected_seeds(const std::string& seed) {
    if (seed == "all") return {SeedName::W1, SeedName::W2, SeedName::W3};
    return {parse_seed_name(seed)};
}

/// Writes to --out when given, otherwise to out.
void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (!config.out) {
        out << text;
        return;
    }
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open output file " + *config.out);
    file << text;
}

SolutionDocument read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
    return solutions_from_json(j);
}

Vec3 parse_vector_flag(const std::string& text, const KZSystem& sys) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw InvalidArgument("--vector needs three comma separated scalars");
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        v(i) = parse_scalar(parts[static_cast<std::size_t>(i)]).substitute(sys.z1(), sys.z2());
    }
    return v;
}

std::string residual_text(const ZVector& entries) {
    return "[" + render_zfunction(entries[0]) + ", " + render_zfunction(entries[1]) + ", " +
           render_zfunction(entries[2]) + "]";
}

}  // namespace

KZSystem system_for(const RunConfig& config) {
    if (!numeric(config)) return build_s3_symbolic();
    if (!config.z1 || !config.z2) throw InvalidArgument("numeric mode needs both --z1 and --z2");
    return build_s3_system(ParamScalar(Rational::parse(*config.z1)), ParamScalar(Rational::parse(*config.z2)));
}

int cmd_basis(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.k_max < 5) throw InvalidArgument("--kmax must be at least 5");
    const KZSystem sys = system_for(config);
    SolutionDocument doc{mode_name(config), sys.z1(), sys.z2(), {}};
    for (SeedName name : selected_seeds(config.seed)) {
        BasisChain chain = build_basis_chain(sys, name, config.k_max);
        const ResidualReport r = residual(sys, chain.solution);
        if (!r.is_zero) {
            err << "error: " << chain.solution.name << " has nonzero residual " << residual_text(r.entries) << "\n";
            return ExitVerificationFailure;
        }
        doc.solutions.push_back(std::move(chain.solution));
    }
    emit(config, render(doc, config.format), out);
    return ExitSuccess;
}

int cmd_series(const RunConfig& config, std::ostream& out, std::ostream&) {
    const KZSystem sys = system_for(config);
    std::string seed_name;
    SeedSpec seed;
    if (config.order || config.vector) {
        if (!config.order || !config.vector) throw InvalidArgument("explicit seeds need both --order and --vector");
        seed = SeedSpec{*config.order, parse_vector_flag(*config.vector, sys)};
    } else {
        if (config.seed == "all") throw InvalidArgument("series needs a single seed (w1, w2 or w3)");
        const SeedName name = parse_seed_name(config.seed);
        seed_name = to_string(name);
        seed = canonical_seed(sys, name);
    }
    validate_seed(sys, seed);
    CoefficientTable table = config.k_max < seed.order ? CoefficientTable(seed.order, config.k_max)
                                                       : generate(sys, seed, config.k_max);
    const SeriesDocument doc{mode_name(config), sys.z1(), sys.z2(), seed_name, seed, std::move(table)};
    emit(config, render(doc, config.format), out);
    return ExitSuccess;
}

int cmd_verify(const std::vector<std::string>& files, const RunConfig& config, std::ostream& out, std::ostream&) {
    if (files.empty()) throw InvalidArgument("verify needs at least one file");
    bool all_zero = true;
    Json report = Json::array();
    std::ostringstream text;
    for (const auto& path : files) {
        const SolutionDocument doc = read_document(path);
        const KZSystem sys = build_s3_system(doc.z1, doc.z2);
        for (const auto& w : doc.solutions) {
            const ResidualReport r = residual(sys, w);
            all_zero = all_zero && r.is_zero;
            Json entry;
            entry["file"] = path;
            entry["name"] = w.name;
            entry["residual_zero"] = r.is_zero;
            entry["residual"] = Json::array(
                {render_zfunction(r.entries[0]), render_zfunction(r.entries[1]), render_zfunction(r.entries[2])});
            report.push_back(entry);
            text << path << " " << w.name << ": " << (r.is_zero ? "residual zero" : "residual NONZERO");
            if (!r.is_zero) text << " " << residual_text(r.entries);
            text << "\n";
        }
    }
    if (config.format == OutputFormat::Json) {
        Json j;
        j["verified"] = all_zero;
        j["solutions"] = report;
        emit(config, j.dump(2) + "\n", out);
    } else {
        emit(config, text.str(), out);
    }
    return all_zero ? ExitSuccess : ExitVerificationFailure;
}

int cmd_audit(const RunConfig& config, std::ostream& out, std::ostream&) {
    const AuditReport report = audit_against_paper(compute_audit_inputs(std::max(config.k_max, 5)));
    emit(config, render(report, config.format), out);
    return ExitSuccess;
}

int cmd_independence(const std::vector<std::string>& files, const RunConfig& config, std::ostream& out,
                     std::ostream&) {
    std::vector<RationalSolution> all;
    for (const auto& path : files) {
        SolutionDocument doc = read_document(path);
        for (auto& w : doc.solutions) {
            if (!all.empty() && (w.z1 != all.front().z1 || w.z2 != all.front().z2)) {
                throw InvalidArgument("solutions in " + path + " use different poles");
            }
            all.push_back(std::move(w));
        }
    }
    if (all.size() != 3) throw InvalidArgument("independence needs exactly three solutions");
    const IndependenceReport r = independence(all);
    if (config.format == OutputFormat::Json) {
        Json j;
        j["independent"] = r.independent;
        j["determinant"] = render_zfunction(r.determinant);
        emit(config, j.dump(2) + "\n", out);
    } else {
        emit(config,
             std::string(r.independent ? "independent" : "dependent") + "\ndeterminant: " +
                 render_zfunction(r.determinant) + "\n",
             out);
    }
    return ExitSuccess;
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
    try {
        return body();
    } catch (const DegenerateConfiguration& e) {
        err << "error: " << e.what() << "\n";
        return ExitDegenerateConfiguration;
    } catch (const UnsolvableResonance& e) {
        err << "error: " << e.what() << "\n";
        return ExitUnsolvableResonance;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitUsage;
    }
}

}  // namespace kzrat
