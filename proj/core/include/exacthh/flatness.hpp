#pragma once

#include "exacthh/bar.hpp"

namespace exacthh {

/* Characteristic-p escape hatches for the radical-based criterion: either a
 * radical basis for the algebra under test (validated as a nilpotent two-sided
 * ideal) or a finite family of test modules.  In characteristic 0 both are
 * ignored and the radical is computed from the trace form. */
struct FlatnessOptions {
    std::optional<Subspace> user_radical;
    std::vector<Module> test_family;
};

struct FlatnessWitness {
    std::string test_module;
    int tor1_dim = 0;
};

struct FlatnessReport {
    bool flat = false;
    /* the verdict only covers the supplied test family, not the canonical
     * B/rad(B) criterion */
    bool relative_to_family = false;
    std::vector<FlatnessWitness> witnesses;
};

/* flat <=> projective <=> Tor_1^B(m, B/rad B) = 0 for finite-dimensional m
 * (the symmetric criterion when m is a left module).  right_side selects
 * which action of a bimodule is under test. */
FlatnessReport is_flat(const Algebra& b, const Module& m, bool right_side,
                       const FlatnessOptions& opt = {});

struct RFlatReport {
    bool rflat = false;
    int image_dim = 0;    // dim of im(phi), the base the test actually runs over
    int quotient_dim = 0; // dim of A / im(phi)
    FlatnessReport quotient_report;
    /* with a supplied augmentation s : A -> B (s o phi = id) the extension
     * splits, so flatness of A itself must agree with the quotient verdict;
     * recorded here as a cross-check */
    std::optional<bool> augmented_agrees;
};

/* r-flatness of phi : B -> A: the quotient bimodule A / im(phi) is flat as a
 * left module over im(phi).  A general phi is first replaced by the inclusion
 * of its image. */
RFlatReport rflat_extension(const AlgebraMorphism& phi, const FlatnessOptions& opt = {},
                            const std::optional<AlgebraMorphism>& augmentation = {});

} // namespace exacthh
