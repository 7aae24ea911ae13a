#include "kzrat/serialize.hpp"

#include "kzrat/errors.hpp"
#include "kzrat/scalar_text.hpp"

#include <sstream>

namespace kzrat {

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "latex") return OutputFormat::Latex;
    if (name == "text") return OutputFormat::Text;
    throw InvalidArgument("unknown format '" + name + "'");
}

namespace {

Json vector_json(const Vec3& v) { return Json::array({render_scalar(v(0)), render_scalar(v(1)), render_scalar(v(2))}); }

Json rational_vector_json(const Vector3<Rational>& v) {
    return Json::array({v(0).to_string(), v(1).to_string(), v(2).to_string()});
}

Json parameters_json(const ParamScalar& z1, const ParamScalar& z2) {
    Json p;
    p["z1"] = render_scalar(z1);
    p["z2"] = render_scalar(z2);
    return p;
}

std::string vector_text(const Vec3& v) {
    return "[" + render_scalar(v(0)) + ", " + render_scalar(v(1)) + ", " + render_scalar(v(2)) + "]";
}

std::string vector_latex(const Vec3& v) {
    return "\\begin{pmatrix} " + render_scalar_latex(v(0)) + " \\\\ " + render_scalar_latex(v(1)) + " \\\\ " +
           render_scalar_latex(v(2)) + " \\end{pmatrix}";
}

/// z - a in LaTeX, simplified for numeric a.
std::string linear_factor_latex(const ParamScalar& a) {
    if (a.is_constant()) {
        const Rational c = a.constant_value();
        if (c.is_zero()) return "z";
        const std::string mag = render_scalar_latex(ParamScalar(c.abs()));
        return c.sign() > 0 ? "(z - " + mag + ")" : "(z + " + mag + ")";
    }
    return "(z - " + render_scalar_latex(a) + ")";
}

std::string linear_factor_text(const ParamScalar& a) { return "(z - (" + render_scalar(a) + "))"; }

Vec3 parse_vector(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) {
        throw InvalidArgument(where + ": expected an array of three scalar strings");
    }
    Vec3 v;
    for (int i = 0; i < 3; ++i) {
        const Json& e = j.at(static_cast<std::size_t>(i));
        if (!e.is_string()) throw InvalidArgument(where + ": vector entries must be strings");
        v(i) = parse_scalar(e.get<std::string>());
    }
    return v;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidArgument(where + ": missing field '" + key + "'");
    }
    return j.at(key);
}

}  // namespace

Json to_json(const SolutionDocument& doc) {
    Json out;
    out["mode"] = doc.mode;
    out["parameters"] = parameters_json(doc.z1, doc.z2);
    Json sols = Json::array();
    for (const auto& w : doc.solutions) {
        Json s;
        s["name"] = w.name;
        Json poly = Json::array();
        for (int p = 2; p >= 0; --p) {
            const Vec3& v = w.poly[static_cast<std::size_t>(p)];
            if (is_zero_matrix(v)) continue;
            poly.push_back(Json{{"power", p}, {"vector", vector_json(v)}});
        }
        s["polynomial_part"] = poly;
        Json poles = Json::array();
        const std::array<ParamScalar, 2> locations = {w.z1, w.z2};
        for (std::size_t j = 0; j < 2; ++j) {
            Json terms = Json::array();
            const Vec3& order2 = w.residues.r[2 * j];
            const Vec3& order1 = w.residues.r[2 * j + 1];
            if (!is_zero_matrix(order2)) terms.push_back(Json{{"order", 2}, {"vector", vector_json(order2)}});
            if (!is_zero_matrix(order1)) terms.push_back(Json{{"order", 1}, {"vector", vector_json(order1)}});
            if (terms.empty()) continue;
            poles.push_back(Json{{"location", render_scalar(locations[j])}, {"terms", terms}});
        }
        s["poles"] = poles;
        sols.push_back(s);
    }
    out["solutions"] = sols;
    return out;
}

SolutionDocument solutions_from_json(const Json& j) {
    SolutionDocument doc;
    const Json& mode = field(j, "mode", "document");
    if (!mode.is_string() || (mode != "symbolic" && mode != "numeric")) {
        throw InvalidArgument("document: mode must be \"symbolic\" or \"numeric\"");
    }
    doc.mode = mode.get<std::string>();
    const Json& params = field(j, "parameters", "document");
    for (const char* key : {"z1", "z2"}) {
        if (!field(params, key, "parameters").is_string()) {
            throw InvalidArgument(std::string("parameters: ") + key + " must be a string");
        }
    }
    doc.z1 = parse_scalar(params.at("z1").get<std::string>());
    doc.z2 = parse_scalar(params.at("z2").get<std::string>());
    const Json& sols = field(j, "solutions", "document");
    if (!sols.is_array()) throw InvalidArgument("document: solutions must be an array");

    for (const Json& s : sols) {
        RationalSolution w;
        w.z1 = doc.z1;
        w.z2 = doc.z2;
        const Json& name = field(s, "name", "solution");
        if (!name.is_string()) throw InvalidArgument("solution: name must be a string");
        w.name = name.get<std::string>();
        const std::string where = "solution " + w.name;
        const Json& poly = field(s, "polynomial_part", where);
        if (!poly.is_array()) throw InvalidArgument(where + ": polynomial_part must be an array");
        for (const Json& term : poly) {
            const Json& power = field(term, "power", where);
            if (!power.is_number_integer() || power.get<int>() < 0 || power.get<int>() > 2) {
                throw InvalidArgument(where + ": polynomial power must be 0, 1 or 2");
            }
            w.poly[static_cast<std::size_t>(power.get<int>())] += parse_vector(field(term, "vector", where), where);
        }
        const Json& poles = field(s, "poles", where);
        if (!poles.is_array()) throw InvalidArgument(where + ": poles must be an array");
        for (const Json& pole : poles) {
            const Json& loc = field(pole, "location", where);
            if (!loc.is_string()) throw InvalidArgument(where + ": pole location must be a string");
            const ParamScalar at = parse_scalar(loc.get<std::string>());
            std::size_t base = 0;
            if (at == doc.z1) {
                base = 0;
            } else if (at == doc.z2) {
                base = 2;
            } else {
                throw InvalidArgument(where + ": pole location " + loc.get<std::string>() +
                                      " is neither z1 nor z2");
            }
            const Json& terms = field(pole, "terms", where);
            if (!terms.is_array()) throw InvalidArgument(where + ": pole terms must be an array");
            for (const Json& term : terms) {
                const Json& order = field(term, "order", where);
                if (!order.is_number_integer() || (order.get<int>() != 1 && order.get<int>() != 2)) {
                    throw InvalidArgument(where + ": pole order must be 1 or 2");
                }
                const std::size_t slot = base + (order.get<int>() == 2 ? 0 : 1);
                w.residues.r[slot] += parse_vector(field(term, "vector", where), where);
            }
        }
        doc.solutions.push_back(std::move(w));
    }
    return doc;
}

std::string to_latex(const SolutionDocument& doc) {
    std::ostringstream out;
    out << "% mode: " << doc.mode << ", z_1 = " << render_scalar(doc.z1) << ", z_2 = " << render_scalar(doc.z2)
        << "\n";
    for (const auto& w : doc.solutions) {
        std::string name = w.name;
        if (name.size() > 1 && name[0] == 'W') name = "W_{" + name.substr(1) + "}";
        std::vector<std::string> terms;
        const std::array<ParamScalar, 2> locations = {w.z1, w.z2};
        for (std::size_t j = 0; j < 2; ++j) {
            const std::string f = linear_factor_latex(locations[j]);
            if (!is_zero_matrix(w.residues.r[2 * j])) {
                terms.push_back("\\frac{1}{" + f + "^{2}} " + vector_latex(w.residues.r[2 * j]));
            }
            if (!is_zero_matrix(w.residues.r[2 * j + 1])) {
                terms.push_back("\\frac{1}{" + f + "} " + vector_latex(w.residues.r[2 * j + 1]));
            }
        }
        const std::array<const char*, 3> powers = {"", "z ", "z^{2} "};
        for (int p = 2; p >= 0; --p) {
            const Vec3& v = w.poly[static_cast<std::size_t>(p)];
            if (!is_zero_matrix(v)) terms.push_back(std::string(powers[static_cast<std::size_t>(p)]) + vector_latex(v));
        }
        out << "\\[\n" << name << "(z) = ";
        if (terms.empty()) out << "0";
        for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? "\n  + " : "") << terms[i];
        out << "\n\\]\n";
    }
    return out.str();
}

std::string to_text(const SolutionDocument& doc) {
    std::ostringstream out;
    out << "mode: " << doc.mode << "  z1 = " << render_scalar(doc.z1) << "  z2 = " << render_scalar(doc.z2) << "\n";
    for (const auto& w : doc.solutions) {
        out << w.name << "(z):\n";
        for (int p = 2; p >= 0; --p) {
            const Vec3& v = w.poly[static_cast<std::size_t>(p)];
            if (!is_zero_matrix(v)) out << "  z^" << p << ": " << vector_text(v) << "\n";
        }
        const std::array<ParamScalar, 2> locations = {w.z1, w.z2};
        for (std::size_t j = 0; j < 2; ++j) {
            const std::string f = linear_factor_text(locations[j]);
            if (!is_zero_matrix(w.residues.r[2 * j])) {
                out << "  1/" << f << "^2: " << vector_text(w.residues.r[2 * j]) << "\n";
            }
            if (!is_zero_matrix(w.residues.r[2 * j + 1])) {
                out << "  1/" << f << ": " << vector_text(w.residues.r[2 * j + 1]) << "\n";
            }
        }
    }
    return out.str();
}

namespace {

int first_row(const SeriesDocument& doc) { return std::min(-2, doc.seed.order); }

}  // namespace

Json to_json(const SeriesDocument& doc) {
    Json out;
    out["mode"] = doc.mode;
    out["parameters"] = parameters_json(doc.z1, doc.z2);
    Json seed;
    seed["name"] = doc.seed_name.empty() ? Json(nullptr) : Json(doc.seed_name);
    seed["order"] = doc.seed.order;
    seed["vector"] = vector_json(doc.seed.vector);
    out["seed"] = seed;
    out["k_max"] = doc.table.k_max();
    Json rows = Json::array();
    for (int k = first_row(doc); k <= doc.table.k_max(); ++k) {
        rows.push_back(Json{{"k", k}, {"vector", vector_json(doc.table.coeff(k))}});
    }
    out["coefficients"] = rows;
    Json res = Json::array();
    for (const auto& r : doc.table.resonances()) {
        res.push_back(Json{{"level", r.level},
                           {"kernel", rational_vector_json(r.kernel)},
                           {"free_parameter", render_scalar(r.free_parameter)}});
    }
    out["resonances"] = res;
    return out;
}

std::string to_text(const SeriesDocument& doc) {
    std::ostringstream out;
    out << "seed " << (doc.seed_name.empty() ? "explicit" : doc.seed_name) << " at order " << doc.seed.order << ": "
        << vector_text(doc.seed.vector) << "\n";
    for (int k = first_row(doc); k <= doc.table.k_max(); ++k) {
        out << "G_" << k << " = " << vector_text(doc.table.coeff(k)) << "\n";
    }
    for (const auto& r : doc.table.resonances()) {
        out << "resonance at level " << r.level << ": kernel [" << r.kernel(0) << ", " << r.kernel(1) << ", "
            << r.kernel(2) << "], free parameter " << render_scalar(r.free_parameter) << "\n";
    }
    return out.str();
}

std::string to_latex(const SeriesDocument& doc) {
    std::ostringstream out;
    out << "\\begin{align*}\n";
    for (int k = first_row(doc); k <= doc.table.k_max(); ++k) {
        out << "G_{" << k << "} &= " << vector_latex(doc.table.coeff(k)) << " \\\\\n";
    }
    out << "\\end{align*}\n";
    return out.str();
}

Json to_json(const AuditReport& report) {
    Json out;
    Json items = Json::array();
    for (const auto& item : report.items) {
        Json j;
        j["id"] = item.id;
        j["label"] = item.label;
        j["verdict"] = to_string(item.verdict);
        j["factor"] = item.factor ? Json(*item.factor) : Json(nullptr);
        j["computed"] = item.computed;
        j["printed"] = item.printed;
        j["note"] = item.note;
        items.push_back(j);
    }
    out["items"] = items;
    out["summary"] = Json{{"MATCH", report.count(Verdict::Match)},
                          {"SCALED", report.count(Verdict::Scaled)},
                          {"MISMATCH", report.count(Verdict::Mismatch)}};
    return out;
}

std::string to_text(const AuditReport& report) {
    std::ostringstream out;
    for (const auto& item : report.items) {
        out << item.id << "  " << item.label << ": " << to_string(item.verdict);
        if (item.factor) out << "(" << *item.factor << ")";
        out << "\n";
        if (!item.note.empty()) out << "    note: " << item.note << "\n";
    }
    out << "summary: " << report.count(Verdict::Match) << " MATCH, " << report.count(Verdict::Scaled) << " SCALED, "
        << report.count(Verdict::Mismatch) << " MISMATCH\n";
    return out.str();
}

std::string to_latex(const AuditReport& report) {
    std::ostringstream out;
    out << "\\begin{tabular}{lll}\n";
    for (const auto& item : report.items) {
        out << "\\texttt{" << item.id << "} & " << item.label << " & " << to_string(item.verdict);
        if (item.factor) out << " (" << *item.factor << ")";
        out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

std::string render(const SolutionDocument& doc, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return to_json(doc).dump(2) + "\n";
        case OutputFormat::Latex: return to_latex(doc);
        case OutputFormat::Text: return to_text(doc);
    }
    return {};
}

std::string render(const SeriesDocument& doc, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return to_json(doc).dump(2) + "\n";
        case OutputFormat::Latex: return to_latex(doc);
        case OutputFormat::Text: return to_text(doc);
    }
    return {};
}

std::string render(const AuditReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return to_json(report).dump(2) + "\n";
        case OutputFormat::Latex: return to_latex(report);
        case OutputFormat::Text: return to_text(report);
    }
    return {};
}

}  // namespace kzrat
