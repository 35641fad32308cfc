#include "exacthh/tensor_space.hpp"

#include <limits>

#include "exacthh/errors.hpp"

namespace exacthh {

long long TensorShape::total() const {
    long long t = 1;
    for (int d : dims) {
        t *= d;
        if (t > std::numeric_limits<int>::max())
            throw InputError("tensor space dimension exceeds the representable range");
    }
    return t;
}

long long TensorShape::flatten(const std::vector<int>& idx) const {
    long long f = 0;
    for (size_t s = 0; s < dims.size(); ++s) f = f * dims[s] + idx[s];
    return f;
}

std::vector<int> TensorShape::unflatten(long long flat) const {
    std::vector<int> idx(dims.size());
    for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
        idx[s] = static_cast<int>(flat % dims[s]);
        flat /= dims[s];
    }
    return idx;
}

Matrix bilinear_matrix(const FieldSpec& F, int da, int db, int out_dim, const BilinearRule& mu) {
    Matrix m(F, out_dim, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j) {
            auto v = mu(i, j);
            for (int k = 0; k < out_dim; ++k) m.at(k, i * db + j) = v[k];
        }
    return m;
}

Matrix merge_slots(const FieldSpec& F, const TensorShape& in, int s, int merged_dim,
                   const BilinearRule& mu) {
    if (s < 0 || s + 1 >= in.slot_count()) throw InternalError("merge_slots: slot out of range");
    long long pre = 1, post = 1;
    for (int t = 0; t < s; ++t) pre *= in.dims[t];
    for (int t = s + 2; t < in.slot_count(); ++t) post *= in.dims[t];
    Matrix core = bilinear_matrix(F, in.dims[s], in.dims[s + 1], merged_dim, mu);
    Matrix m = Matrix::kron(Matrix::identity(F, static_cast<int>(pre)), core);
    return Matrix::kron(m, Matrix::identity(F, static_cast<int>(post)));
}

Matrix permute_slots(const FieldSpec& F, const TensorShape& in, const std::vector<int>& src_of) {
    if (static_cast<int>(src_of.size()) != in.slot_count())
        throw InternalError("permute_slots: arity mismatch");
    TensorShape out;
    for (int t : src_of) out.dims.push_back(in.dims[t]);
    long long n = in.total();
    Matrix p(F, static_cast<int>(out.total()), static_cast<int>(n));
    std::vector<int> oidx(src_of.size());
    for (long long f = 0; f < n; ++f) {
        auto idx = in.unflatten(f);
        for (size_t t = 0; t < src_of.size(); ++t) oidx[t] = idx[src_of[t]];
        p.at(static_cast<int>(out.flatten(oidx)), static_cast<int>(f)) = F.from_int(1);
    }
    return p;
}

} // namespace exacthh
