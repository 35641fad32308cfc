#include "exacthh/presets.hpp"

#include "exacthh/errors.hpp"

namespace exacthh {

namespace {

AlgebraMorphism unit_inclusion(const Algebra& a) {
    Matrix m(a.field(), a.dim(), 1);
    for (int i = 0; i < a.dim(); ++i) m.at(i, 0) = a.unit[i];
    AlgebraMorphism f{ground_field(a.field()), a, m};
    validate_morphism(f);
    return f;
}

AlgebraMorphism diagonal_inclusion_t2(const Algebra& t2) {
    Matrix rows(t2.field(), 2, 3);
    rows.at(0, 0) = t2.field().from_int(1); // e11
    rows.at(1, 2) = t2.field().from_int(1); // e22
    return subalgebra_inclusion(t2, Subspace::span(t2.field(), 3, rows)).inclusion;
}

std::vector<Scalar> chi(const FieldSpec& F, std::initializer_list<int> v) {
    std::vector<Scalar> out;
    for (int x : v) out.push_back(F.from_int(x));
    return out;
}

} // namespace

PresetInstance preset(const std::string& name, const FieldSpec& F) {
    PresetInstance p;
    p.name = name;
    auto plain = [&](Algebra a, std::string desc) {
        p.algebra = std::move(a);
        p.description = std::move(desc);
        p.coefficients = regular_bimodule(p.algebra);
    };
    if (name == "ground-field" || name == "k") {
        plain(ground_field(F), "the ground field as an algebra");
    } else if (name == "dual-numbers") {
        plain(dual_numbers(F), "k[x]/(x^2)");
    } else if (name == "trunc-poly-3") {
        plain(truncated_polynomial(F, 3), "k[x]/(x^3)");
    } else if (name == "kxk") {
        plain(product_field(F, 2), "k x k");
    } else if (name == "t2") {
        plain(upper_triangular(F, 2), "upper triangular 2x2 matrices");
    } else if (name == "kz2") {
        plain(monoid_algebra(F, {{0, 1}, {1, 0}}, 0, {"1", "g"}), "group algebra of Z/2");
    } else if (name == "t2-diag" || name == "t2-proj-diag") {
        plain(upper_triangular(F, 2),
              name == "t2-diag" ? "diagonal pair inside upper triangular 2x2"
                                : "cone comparison over the diagonal of T_2");
        p.morphism = diagonal_inclusion_t2(p.algebra);
        p.left_simple = character_right_module(p.algebra, chi(F, {1, 0, 0}));
        p.right_simple = character_left_module(p.algebra, chi(F, {0, 0, 1}));
    } else if (name == "k-in-kxk") {
        plain(product_field(F, 2), "unit inclusion of k into k x k");
        p.morphism = unit_inclusion(p.algebra);
        p.left_simple = character_right_module(p.algebra, chi(F, {0, 1}));
        p.right_simple = character_left_module(p.algebra, chi(F, {0, 1}));
    } else if (name == "k-in-kz2") {
        plain(monoid_algebra(F, {{0, 1}, {1, 0}}, 0, {"1", "g"}),
              "unit inclusion of k into the group algebra of Z/2");
        p.morphism = unit_inclusion(p.algebra);
    } else if (name == "kxk-proj-k") {
        plain(ground_field(F), "second projection of k x k onto k");
        Matrix m(F, 1, 2);
        m.at(0, 1) = F.from_int(1);
        AlgebraMorphism f{product_field(F, 2), p.algebra, m};
        validate_morphism(f);
        p.morphism = std::move(f);
        p.left_simple = character_right_module(p.algebra, chi(F, {1}));
        p.right_simple = character_left_module(p.algebra, chi(F, {1}));
    } else if (name == "kkk-in-t2") {
        plain(upper_triangular(F, 2), "k^3 onto the diagonal of T_2, killing one factor");
        Matrix m(F, 3, 3);
        m.at(0, 0) = F.from_int(1); // e1 -> e11
        m.at(2, 1) = F.from_int(1); // e2 -> e22
        AlgebraMorphism f{product_field(F, 3), p.algebra, m};
        validate_morphism(f);
        p.morphism = std::move(f);
    } else if (name == "kxk-prop21") {
        plain(product_field(F, 2), "k x k with the unital ideal k x 0");
        Matrix first(F, 1, 2);
        first.at(0, 0) = F.from_int(1);
        p.ideal_span = Subspace::span(F, 2, first);
        p.left_simple = character_right_module(p.algebra, chi(F, {0, 1}));
        p.right_simple = character_left_module(p.algebra, chi(F, {0, 1}));
    } else if (name == "t2-prop21-bad") {
        plain(upper_triangular(F, 2), "T_2 with the square-zero ideal span{e12}");
        Matrix mid(F, 1, 3);
        mid.at(0, 1) = F.from_int(1);
        p.ideal_span = Subspace::span(F, 3, mid);
        p.left_simple = character_right_module(p.algebra, chi(F, {1, 0, 0}));
        p.right_simple = character_left_module(p.algebra, chi(F, {0, 0, 1}));
    } else {
        throw InputError("unknown preset '" + name + "' (run the presets subcommand for the list)");
    }
    return p;
}

std::vector<std::pair<std::string, std::string>> preset_catalog() {
    static const char* names[] = {"ground-field", "dual-numbers", "trunc-poly-3", "kxk",
                                  "t2",           "kz2",          "t2-diag",      "t2-proj-diag",
                                  "k-in-kxk",     "k-in-kz2",     "kxk-proj-k",   "kkk-in-t2",
                                  "kxk-prop21",   "t2-prop21-bad"};
    std::vector<std::pair<std::string, std::string>> out;
    FieldSpec q{};
    for (const char* n : names) out.emplace_back(n, preset(n, q).description);
    return out;
}

} // namespace exacthh
