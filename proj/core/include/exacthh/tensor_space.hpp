#pragma once

#include <functional>

#include "exacthh/matrix.hpp"

namespace exacthh {

/* Flattening convention for V_0 ox V_1 ox ... ox V_m: row-major with slot 0
 * most significant, matching Matrix::kron(a, b) acting on V_a ox V_b. */
struct TensorShape {
    std::vector<int> dims;

    long long total() const;
    int slot_count() const { return static_cast<int>(dims.size()); }
    long long flatten(const std::vector<int>& idx) const;
    std::vector<int> unflatten(long long flat) const;
};

/* mu(i, j) = coordinates of the image of e_i ox e_j, length out_dim */
using BilinearRule = std::function<std::vector<Scalar>(int, int)>;

/* out_dim x (da*db) matrix of a bilinear map in the flattened pair basis */
Matrix bilinear_matrix(const FieldSpec& F, int da, int db, int out_dim, const BilinearRule& mu);

/* id ox ... ox mu ox ... ox id merging slots s and s+1 */
Matrix merge_slots(const FieldSpec& F, const TensorShape& in, int s, int merged_dim,
                   const BilinearRule& mu);

/* permutation matrix for reordering slots: output slot t carries input slot
 * src_of[t]; e.g. src_of = {n, 0, 1, ..., n-1} rotates the last slot to the
 * front */
Matrix permute_slots(const FieldSpec& F, const TensorShape& in, const std::vector<int>& src_of);

} // namespace exacthh
