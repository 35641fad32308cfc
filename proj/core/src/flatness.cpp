#include "exacthh/flatness.hpp"

namespace exacthh {

namespace {

Subspace radical_for(const Algebra& b, const FlatnessOptions& opt) {
    if (b.field().is_rational()) return radical(b);
    if (opt.user_radical) {
        validate_radical_candidate(b, *opt.user_radical);
        return *opt.user_radical;
    }
    throw InputError("flatness over F_p needs a user-supplied radical or test family");
}

} // namespace

FlatnessReport is_flat(const Algebra& b, const Module& m, bool right_side,
                       const FlatnessOptions& opt) {
    if (right_side && (!m.has_right() || !same_algebra(*m.right_algebra, b)))
        throw InputError("is_flat: module has no right action of the algebra");
    if (!right_side && (!m.has_left() || !same_algebra(*m.left_algebra, b)))
        throw InputError("is_flat: module has no left action of the algebra");

    FlatnessReport rep;
    std::vector<std::pair<std::string, Module>> tests;
    if (!opt.test_family.empty()) {
        rep.relative_to_family = true;
        for (size_t i = 0; i < opt.test_family.size(); ++i)
            tests.emplace_back("family[" + std::to_string(i) + "]", opt.test_family[i]);
    } else {
        Subspace rad = radical_for(b, opt);
        Module reg = right_side ? left_regular(b) : right_regular(b);
        tests.emplace_back("B/rad(B)", quotient_module(reg, rad).module);
    }

    rep.flat = true;
    for (const auto& [name, t] : tests) {
        ChainComplex c = right_side ? two_sided_bar(m, b, t, 2) : two_sided_bar(t, b, m, 2);
        int tor1 = homology_at(c, 1).dim();
        rep.witnesses.push_back(FlatnessWitness{name, tor1});
        if (tor1 != 0) rep.flat = false;
    }
    return rep;
}

RFlatReport rflat_extension(const AlgebraMorphism& phi, const FlatnessOptions& opt,
                            const std::optional<AlgebraMorphism>& augmentation) {
    const Algebra& a = phi.target;
    Subspace im = phi.image();
    SubalgebraInclusion base = subalgebra_inclusion(a, im);
    ModuleQuotient coker = cokernel_bimodule(base.inclusion);

    RFlatReport rep;
    rep.image_dim = im.dim();
    rep.quotient_dim = coker.module.dim;

    FlatnessOptions inner = opt;
    if (!a.field().is_rational() && opt.user_radical) {
        // the user supplies rad(B); its image under phi is rad(im phi)
        validate_radical_candidate(phi.source, *opt.user_radical);
        Matrix gens(a.field(), opt.user_radical->dim(), im.dim());
        for (int i = 0; i < opt.user_radical->dim(); ++i) {
            auto w = phi.matrix.apply(opt.user_radical->basis().row(i));
            auto c = im.coords(w);
            if (!c) throw InternalError("radical image left the image subalgebra");
            gens.set_row(i, *c);
        }
        inner.user_radical = Subspace::span(a.field(), im.dim(), gens);
    }

    rep.quotient_report = is_flat(base.sub, coker.module, /*right_side=*/false, inner);
    rep.rflat = rep.quotient_report.flat;

    if (augmentation) {
        validate_morphism(*augmentation);
        if (!same_algebra(augmentation->source, a) || !same_algebra(augmentation->target, phi.source))
            throw InputError("augmentation must map the big algebra back to the source");
        if (!(augmentation->matrix * phi.matrix == Matrix::identity(a.field(), phi.source.dim())))
            throw InputError("augmentation does not split the morphism");
        Module a_as_left = restrict_left(left_regular(a), base.inclusion);
        FlatnessReport whole = is_flat(base.sub, a_as_left, false, inner);
        rep.augmented_agrees = (whole.flat == rep.rflat);
    }
    return rep;
}

} // namespace exacthh
