#include "kzrat/audit.hpp"

#include "kzrat/exact_linear.hpp"
#include "kzrat/scalar_text.hpp"
#include "kzrat/verifier.hpp"

#include <initializer_list>

namespace kzrat {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "MATCH";
        case Verdict::Scaled: return "SCALED";
        case Verdict::Mismatch: return "MISMATCH";
    }
    return "?";
}

Comparison compare_values(std::span<const ParamScalar> computed, std::span<const ParamScalar> printed) {
    Comparison out;
    if (computed.size() != printed.size()) return out;
    std::size_t anchor = 0;
    while (anchor < printed.size() && printed[anchor].is_zero()) ++anchor;
    if (anchor == printed.size()) {
        for (const auto& c : computed) {
            if (!c.is_zero()) return out;
        }
        out.verdict = Verdict::Match;
        return out;
    }
    const ParamScalar ratio = computed[anchor] / printed[anchor];
    for (std::size_t i = 0; i < computed.size(); ++i) {
        if (!(computed[i] == ratio * printed[i])) return out;
    }
    out.ratio = ratio;
    if (ratio == ParamScalar(1)) {
        out.verdict = Verdict::Match;
    } else if (ratio.is_constant() && !ratio.is_zero()) {
        out.verdict = Verdict::Scaled;
    }
    return out;
}

std::size_t AuditReport::count(Verdict v) const {
    std::size_t n = 0;
    for (const auto& item : items) n += item.verdict == v ? 1 : 0;
    return n;
}

const AuditItem* AuditReport::find(const std::string& id, const std::string& label) const {
    for (const auto& item : items) {
        if (item.id == id && item.label == label) return &item;
    }
    return nullptr;
}

AuditInputs compute_audit_inputs(int k_max) {
    KZSystem sys = build_s3_symbolic();
    BasisChain w1 = build_basis_chain(sys, SeedName::W1, k_max);
    BasisChain w2 = build_basis_chain(sys, SeedName::W2, k_max);
    BasisChain w3 = build_basis_chain(sys, SeedName::W3, k_max);
    return {std::move(sys), std::move(w1), std::move(w2), std::move(w3)};
}

namespace {

using Texts = std::initializer_list<const char*>;

std::vector<ParamScalar> parse_all(Texts texts) {
    std::vector<ParamScalar> out;
    for (const char* t : texts) out.push_back(parse_scalar(t));
    return out;
}

Vec3 parse_vec(Texts texts) {
    const auto v = parse_all(texts);
    return Vec3(v[0], v[1], v[2]);
}

std::vector<ParamScalar> entries(const Vec3& v) { return {v(0), v(1), v(2)}; }

std::vector<std::string> render_all(std::span<const ParamScalar> values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(render_scalar(v));
    return out;
}

class Auditor {
public:
    explicit Auditor(const AuditInputs& in) : in_(in) {}

    AuditReport run() {
        structure_constants();
        w1_chain();
        moment_inverse();
        w1_residues();
        w2_chain();
        w2_residues();
        w3_residues();
        return std::move(report_);
    }

private:
    AuditItem& add(std::string id, std::string label, const std::vector<ParamScalar>& computed,
                   const std::vector<ParamScalar>& printed, std::string note = {}) {
        const Comparison cmp = compare_values(computed, printed);
        AuditItem item;
        item.id = std::move(id);
        item.label = std::move(label);
        item.computed = render_all(computed);
        item.printed = render_all(printed);
        item.verdict = cmp.verdict;
        if (cmp.verdict == Verdict::Scaled) item.factor = render_scalar(*cmp.ratio);
        if (cmp.verdict == Verdict::Mismatch && cmp.ratio && note.empty()) {
            note = "computed = (" + render_scalar(*cmp.ratio) + ") * printed; the ratio depends on z1, z2";
        }
        item.note = std::move(note);
        report_.items.push_back(std::move(item));
        return report_.items.back();
    }

    AuditItem& add(std::string id, std::string label, const Vec3& computed, Texts printed, std::string note = {}) {
        return add(std::move(id), std::move(label), entries(computed), parse_all(printed), std::move(note));
    }

    /// Item asserting that a solution assembled from printed data solves the system.
    void residual_item(std::string id, std::string label, const RationalSolution& w, std::string note) {
        const ResidualReport r = residual(in_.sys, w);
        AuditItem item;
        item.id = std::move(id);
        item.label = std::move(label);
        for (const auto& e : r.entries) item.computed.push_back(render_zfunction(e));
        item.printed = {"0", "0", "0"};
        item.verdict = r.is_zero ? Verdict::Match : Verdict::Mismatch;
        item.note = r.is_zero ? "residual dW/dz + 2A(z)W vanishes identically" : std::move(note);
        report_.items.push_back(std::move(item));
    }

    void structure_constants() {
        const auto& pairs = in_.sys.spectrum().pairs;
        std::vector<ParamScalar> lambda;
        std::vector<ParamScalar> mu;
        std::vector<ParamScalar> level2;
        std::vector<ParamScalar> level4;
        for (const auto& p : pairs) {
            lambda.emplace_back(p.value);
            mu.emplace_back(Rational(2) * p.value);
            level2.emplace_back(Rational(2) - Rational(2) * p.value);
            level4.emplace_back(Rational(4) - Rational(2) * p.value);
        }
        add("Eq(1.5)", "eigenvalues of T", lambda, parse_all({"2", "1", "-1"}));
        add("Eq(1.6)", "l_1", lift(pairs[0].vector), {"1", "1", "1"});
        add("Eq(1.6)", "l_2", lift(pairs[1].vector), {"0", "1", "-1"});
        add("Eq(1.6)", "l_3", lift(pairs[2].vector), {"2", "-1", "-1"});
        add("Eq(1.7)", "eigenvalues of 2T", mu, parse_all({"4", "2", "-2"}));
        level2_ = level2;
        level4_ = level4;
    }

    void w1_chain() {
        const CoefficientTable& t = in_.w1.table;
        add("Eq(1.9)", "G_-2", t.coeff(-2), {"2", "-1", "-1"});
        add("Eq(1.11)", "G_-1", t.coeff(-1), {"-2*(z1 + z2)", "2*z2", "2*z1"});
        add("Eq(1.13)", "G_0", t.coeff(0), {"-z1^2 + 4*z1*z2 - z2^2", "z1*(z1 - 2*z2)", "z2*(-2*z1 + z2)"});
        add("Eq(1.15)", "G_1", t.coeff(1), {"0", "2*(z1 - z2)^3", "-2*(z1 - z2)^3"});

        const Vec3 rhs2 = recurrence_rhs(in_.sys, 1, t);
        add("Eq(1.17)", "rhs of level 2", rhs2, {"4*(z1 - z2)^4", "-2*(z1 - z2)^4", "-2*(z1 - z2)^4"});
        add("Eq(1.17)", "l_2-component of rhs (level 2)", std::vector<ParamScalar>{eigen_components(in_.sys, rhs2)(1)},
            std::vector<ParamScalar>{ParamScalar(0)}, "rhs lies in span(l_1, l_3), so the resonant level 2 is solvable");
        add("Eq(1.18)", "eigenvalues of 2I - 2T", level2_, parse_all({"-2", "0", "4"}));
        add("Eq(1.19)", "G_2", t.coeff(2), {"(z1 - z2)^4", "-(1/2)*(z1 - z2)^4", "-(1/2)*(z1 - z2)^4"});
        add("Eq(1.21)", "G_3", t.coeff(3),
            {"(3/5)*(z1 - z2)^4*(z1 + z2)", "(1/5)*(z1 - z2)^3*(6*z1^2 - 25*z1*z2 + 9*z2^2)",
             "-(1/5)*(z1 - z2)^3*(9*z1^2 - 25*z1*z2 + 6*z2^2)"});

        const Vec3 rhs4 = recurrence_rhs(in_.sys, 3, t);
        add("Eq(1.23)", "rhs of level 4", rhs4,
            {"(9/5)*(z1 - z2)^4*(3*z1^2 - 4*z1*z2 + 3*z2^2)",
             "(1/5)*(z1 - z2)^3*(6*z1^3 - 8*z1^2*z2 - 71*z1*z2^2 + 33*z2^3)",
             "-(1/5)*(z1 - z2)^3*(33*z1^3 - 71*z1^2*z2 - 8*z1*z2^2 + 6*z2^3)"});
        add("Eq(1.23)", "l_1-component of rhs (level 4)", std::vector<ParamScalar>{eigen_components(in_.sys, rhs4)(0)},
            std::vector<ParamScalar>{ParamScalar(0)}, "rhs lies in span(l_2, l_3), so the resonant level 4 is solvable");
        add("Eq(1.24)", "eigenvalues of 4I - 2T", level4_, parse_all({"0", "2", "6"}));
        add("Eq(1.25)", "G_4", t.coeff(4),
            {"(3/10)*(z1 - z2)^4*(3*z1^2 - 4*z1*z2 + 3*z2^2)",
             "(1/10)*(z1 - z2)^3*(15*z1^3 - 29*z1^2*z2 - 50*z1*z2^2 + 24*z2^3)",
             "-(1/10)*(z1 - z2)^3*(24*z1^3 - 50*z1^2*z2 - 29*z1*z2^2 + 15*z2^3)"});
    }

    void moment_inverse() {
        const MomentMatrix exact = inverse_exact(build_moment_matrix(in_.sys.z1(), in_.sys.z2()));
        const MomentMatrix printed = moment_inverse_closed_form(in_.sys.z1(), in_.sys.z2());
        std::vector<ParamScalar> c;
        std::vector<ParamScalar> p;
        std::string note;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                c.push_back(exact(i, j));
                p.push_back(printed(i, j));
                if (exact(i, j) == printed(i, j)) continue;
                note += (note.empty() ? "" : "; ") + std::string("entry (") + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + ") printed " + render_scalar(printed(i, j)) + ", exact " +
                        render_scalar(exact(i, j));
            }
        }
        if (!note.empty()) {
            note += "; S times the printed matrix is not the identity, residues are solved by elimination on S";
        }
        add("Eq(1.35)", "S^-1 (row-major)", c, p, note);
    }

    void w1_residues() {
        const auto& r = in_.w1.residues.r;
        add("Eq(1.36)", "L_1", r[0],
            {"(1/10)*(3*z1 - 7*z2)*(z1 - z2)^3", "(1/10)*(3*z1 - 7*z2)*(z1 - z2)^3",
             "-(1/5)*(3*z1 - 7*z2)*(z1 - z2)^3"});
        add("Eq(1.37)", "L_2", r[1], {"0", "(1/5)*(3*z1 - 7*z2)*(z1 - z2)^2", "-(1/5)*(3*z1 - 7*z2)*(z1 - z2)^2"});
        add("Eq(1.38)", "L_3", r[2],
            {"(1/10)*(7*z1 - 3*z2)*(z1 - z2)^3", "-(1/5)*(7*z1 - 3*z2)*(z1 - z2)^3",
             "(1/10)*(7*z1 - 3*z2)*(z1 - z2)^3"});
        const Vec3 printed_l4 =
            parse_vec({"0", "(1/5)*(7*z1 - 3*z2)*(z1 - z2)^3", "-(1/5)*(7*z1 - 3*z2)*(z1 - z2)^3"});
        add("Eq(1.39)", "L_4", entries(r[3]), entries(printed_l4),
            "exponent misprint: computed L_4 carries (z1 - z2)^2, printed (z1 - z2)^3 (computed = printed / (z1 - z2)); "
            "the z1 <-> z2 mirror of L_2 also has (z1 - z2)^2");

        RationalSolution printed = in_.w1.solution;
        printed.residues.r[3] = printed_l4;
        residual_item("Eq(1.40)", "W_1 assembled from printed G_-2, G_-1, G_0, L_1..L_4", printed,
                      "nonzero residual; the printed L_4 breaks the solution (with computed L_4 the residual is zero)");
    }

    void w2_chain() {
        const CoefficientTable& t = in_.w2.table;
        add("Eq(1.42)", "g_2", t.coeff(2), {"0", "1", "-1"});

        const Vec3 printed_g3 = parse_vec({"(1/5)*(z1 - z2)", "(1/5)*(2*z1 + 3*z2)", "(1/5)*(-3*z1 - 2*z2)"});
        // The same level solved with the factor 2 dropped from the recurrence.
        const Vec3 half_rhs3 = ParamScalar(Rational(1, 2)) * recurrence_rhs(in_.sys, 2, t);
        const Vec3 unscaled_g3 = solve_level(in_.sys, 3, half_rhs3).coefficient;
        std::string note = "the factor 2 of the recurrence is dropped in the printed level equation";
        if (unscaled_g3 == printed_g3) {
            note += "; printed value solves (3I - 2T) g_3 = T_0 g_2 exactly, while the system requires "
                    "(3I - 2T) g_3 = 2 T_0 g_2";
        }
        add("Eq(1.44)", "g_3", entries(t.coeff(3)), entries(printed_g3), note);

        CoefficientTable printed_table(2, 3);
        printed_table.set(2, t.coeff(2));
        printed_table.set(3, printed_g3);
        const Vec3 printed_rhs_unscaled = ParamScalar(Rational(1, 2)) * recurrence_rhs(in_.sys, 3, printed_table);
        const Vec3 printed_rhs4 =
            parse_vec({"(7/5)*(z1 - z2)*(z1 + z2)", "(1/5)*(z1^2 + z1*z2 + 8*z2^2)", "(1/5)*(-8*z1^2 - z1*z2 - z2^2)"});
        std::string rhs_note = "downstream of the dropped factor 2";
        if (printed_rhs_unscaled == printed_rhs4) {
            rhs_note += "; printed value equals T_0 g_3 + T_1 g_2 evaluated with the printed g_3";
        }
        const Vec3 rhs4 = recurrence_rhs(in_.sys, 3, t);
        add("Eq(1.46)", "rhs of level 4 (second chain)", entries(rhs4), entries(printed_rhs4), rhs_note);
        add("Eq(1.46)", "l_1-component of rhs (level 4, second chain)", std::vector<ParamScalar>{eigen_components(in_.sys, rhs4)(0)},
            std::vector<ParamScalar>{ParamScalar(0)}, "rhs lies in span(l_2, l_3), so the resonant level 4 is solvable");
    }

    void w2_residues() {
        const auto& r = in_.w2.residues.r;
        const std::string note =
            "printed value is reproduced by neither the factor-2 recurrence nor the variant with the factor dropped";
        const std::array<Vec3, 4> printed = {
            parse_vec({"(5*z1 + 3*z2)/(10*(z1 - z2))", "(z1*z2 + 9*(-2*z1^2 + 2*z1*z2 + z2^2))/(30*(z1 - z2)^2)",
                       "-(z1*z2 - 3*z1*(z1 - 4*z2))/(30*(z1 - z2)^2)"}),
            // "+ +" in the third entry read as a single "+".
            parse_vec({"-4*(z1 + z2)/(5*(z1 - z2)^2)", "-(-24*z1^2 + 46*z1*z2 - 12*z2^2)/(15*(z1 - z2)^3)",
                       "(-12*z1^2 + 46*z1*z2 - 24*z2^2)/(15*(z1 - z2)^3)"}),
            // Unbalanced parenthesis in the third entry closed before the denominator.
            parse_vec({"-(3*z1 + 5*z2)/(10*(z1 - z2))", "(z1*z2 + 3*(4*z1 - z2)*z2)/(30*(z1 - z2)^2)",
                       "-(z1*z2 + 9*(z1^2 + 2*z1*z2 - 2*z2^2))/(30*(z1 - z2)^2)"}),
            parse_vec({"4*(z1 + z2)/(5*(z1 - z2)^2)", "(-24*z1^2 + 46*z1*z2 - 12*z2^2)/(15*(z1 - z2)^3)",
                       "-(-12*z1^2 + 46*z1*z2 - 24*z2^2)/(15*(z1 - z2)^3)"}),
        };
        const std::array<const char*, 4> ids = {"Eq(1.51)", "Eq(1.52)", "Eq(1.53)", "Eq(1.54)"};
        for (std::size_t j = 0; j < 4; ++j) {
            std::string item_note = note;
            if (j == 1) item_note += "; typesetting repair: '+ +' read as '+'";
            if (j == 2) item_note += "; typesetting repair: unbalanced parenthesis closed";
            const Comparison cmp = compare_values(entries(r[j]), entries(printed[j]));
            if (cmp.verdict == Verdict::Match) item_note.clear();
            add(ids[j], "M_" + std::to_string(j + 1), entries(r[j]), entries(printed[j]), item_note);
        }
        RationalSolution w = in_.w2.solution;
        w.residues.r = printed;
        residual_item("Eq(1.55)", "W_2 assembled from printed M_1..M_4", w,
                      "the printed W_2 does not satisfy dW/dz = -2A(z)W");
    }

    void w3_residues() {
        const auto& r = in_.w3.residues.r;
        add("Eq(1.58)", "N_1", r[0], {"1/(z1 - z2)^2", "1/(z1 - z2)^2", "1/(z1 - z2)^2"});
        add("Eq(1.58)", "N_3", r[2], {"1/(z1 - z2)^2", "1/(z1 - z2)^2", "1/(z1 - z2)^2"});
        vector_factor_item("Eq(1.59)", "N_2", r[1], "2/(-z1 + z2)^3");
        vector_factor_item("Eq(1.59)", "N_4", r[3], "-2/(-z1 + z2)^3");
    }

    /// The display prints a scalar where the residue is a vector.
    void vector_factor_item(std::string id, std::string label, const Vec3& computed, const char* printed_text) {
        const ParamScalar printed = parse_scalar(printed_text);
        std::string note = "shape mismatch: printed value is a scalar, the computed residue is a vector";
        const Vec3 direction = computed / printed;
        bool constant = true;
        for (int i = 0; i < 3; ++i) constant = constant && direction(i).is_constant();
        if (constant) {
            note += "; computed = printed * (" + render_scalar(direction(0)) + ", " + render_scalar(direction(1)) +
                    ", " + render_scalar(direction(2)) + ")^T";
            if (direction == lift(in_.sys.spectrum().pairs[0].vector)) note += " = printed * l_1";
        }
        add(std::move(id), std::move(label), entries(computed), std::vector<ParamScalar>{printed}, note);
    }

    const AuditInputs& in_;
    AuditReport report_;
    std::vector<ParamScalar> level2_;
    std::vector<ParamScalar> level4_;
};

}  // namespace

AuditReport audit_against_paper(const AuditInputs& computed) { return Auditor(computed).run(); }

}  // namespace kzrat
