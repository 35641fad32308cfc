#include "exacthh/chain_complex.hpp"

namespace exacthh {

int ChainComplex::dim_at(int n) const {
    int i = n - min_degree;
    if (i < 0 || i >= static_cast<int>(dims.size())) return 0;
    return dims[i];
}

Matrix ChainComplex::boundary(int n) const {
    int i = n - min_degree;
    if (i < 0 || i >= static_cast<int>(d.size())) return Matrix(field, dim_at(n - 1), dim_at(n));
    return d[i];
}

void validate_complex(const ChainComplex& c) {
    if (c.d.size() != c.dims.size()) throw InternalError("complex: d count != dims count");
    for (size_t i = 0; i < c.dims.size(); ++i) {
        int n = c.min_degree + static_cast<int>(i);
        if (c.d[i].cols() != c.dims[i])
            throw InternalError("complex: d_" + std::to_string(n) + " has wrong column count");
        if (c.d[i].rows() != c.dim_at(n - 1))
            throw InternalError("complex: d_" + std::to_string(n) + " has wrong row count");
        if (i > 0 && !(c.d[i - 1] * c.d[i]).is_zero())
            throw InternalError("complex: d_" + std::to_string(n - 1) + " o d_" +
                                std::to_string(n) + " != 0");
    }
}

HomologySpace homology_at(const ChainComplex& c, int n) {
    if (n > c.certified_degree)
        throw InternalError("homology requested above certified degree");
    const FieldSpec& F = c.field;
    int dn = c.dim_at(n);
    Subspace cycles = Subspace::span(F, dn, kernel_basis(c.boundary(n)));
    Subspace boundaries = Subspace::span(F, dn, image_basis(c.boundary(n + 1)));
    return HomologySpace{n, Subquotient(cycles, boundaries)};
}

int HomologyTable::dim_at(int n) const {
    int i = n - min_degree;
    if (i < 0 || i >= static_cast<int>(dims.size())) return 0;
    return dims[i];
}

HomologyTable homology(const ChainComplex& c) {
    HomologyTable t;
    t.min_degree = c.min_degree;
    for (int n = c.min_degree; n <= c.certified_degree; ++n)
        t.dims.push_back(homology_at(c, n).dim());
    return t;
}

Matrix ChainMap::at(int n, const ChainComplex& src, const ChainComplex& dst) const {
    int i = n - min_degree;
    if (i < 0 || i >= static_cast<int>(maps.size()))
        return Matrix(src.field, dst.dim_at(n), src.dim_at(n));
    return maps[i];
}

void validate_chain_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst) {
    for (size_t i = 0; i < f.maps.size(); ++i) {
        int n = f.min_degree + static_cast<int>(i);
        if (f.maps[i].rows() != dst.dim_at(n) || f.maps[i].cols() != src.dim_at(n))
            throw InternalError("chain map: degree " + std::to_string(n) + " shape mismatch");
        Matrix lhs = dst.boundary(n) * f.maps[i];
        Matrix rhs = f.at(n - 1, src, dst) * src.boundary(n);
        if (!(lhs == rhs))
            throw InternalError("chain map: does not commute with d at degree " +
                                std::to_string(n));
    }
    // degrees where src is nonzero must be covered by stored maps (or the zero
    // map must genuinely commute, checked above for stored ones)
    for (int n = src.min_degree; n <= src.top_degree(); ++n) {
        int i = n - f.min_degree;
        if (i < 0 || i >= static_cast<int>(f.maps.size())) {
            if (src.dim_at(n) != 0 && dst.dim_at(n) != 0)
                throw InternalError("chain map: degree " + std::to_string(n) + " not stored");
        }
    }
}

ChainComplex cone(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst) {
    const FieldSpec& F = src.field;
    ChainComplex out;
    out.field = F;
    out.min_degree = std::min(src.min_degree + 1, dst.min_degree);
    int top = std::max(src.top_degree() + 1, dst.top_degree());
    for (int n = out.min_degree; n <= top; ++n) {
        int sdim = src.dim_at(n - 1);
        int ddim = dst.dim_at(n);
        out.dims.push_back(sdim + ddim);
        int rs = src.dim_at(n - 2), rd = dst.dim_at(n - 1);
        Matrix m(F, rs + rd, sdim + ddim);
        Matrix ds = src.boundary(n - 1);
        for (int r = 0; r < rs; ++r)
            for (int c = 0; c < sdim; ++c) m.at(r, c) = F.neg(ds.at(r, c));
        Matrix fm = f.at(n - 1, src, dst);
        for (int r = 0; r < rd; ++r)
            for (int c = 0; c < sdim; ++c) m.at(rs + r, c) = F.neg(fm.at(r, c));
        Matrix dd = dst.boundary(n);
        for (int r = 0; r < rd; ++r)
            for (int c = 0; c < ddim; ++c) m.at(rs + r, sdim + c) = dd.at(r, c);
        out.d.push_back(std::move(m));
    }
    out.certified_degree = std::min(src.certified_degree + 1, dst.certified_degree);
    validate_complex(out);
    return out;
}

ChainComplex suspension(const ChainComplex& c) {
    ChainComplex out;
    out.field = c.field;
    out.min_degree = c.min_degree + 1;
    out.dims = c.dims;
    for (const auto& m : c.d) out.d.push_back(m.negated());
    out.certified_degree = c.certified_degree + 1;
    return out;
}

Matrix induced_on_homology(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst,
                           const HomologySpace& hsrc, const HomologySpace& hdst) {
    if (hsrc.degree != hdst.degree)
        throw InternalError("induced_on_homology: degree mismatch");
    return induced_map_on_subquotients(f.at(hsrc.degree, src, dst), hsrc.space, hdst.space);
}

SubcomplexResult subcomplex(const ChainComplex& c, const std::vector<Subspace>& layers) {
    if (layers.size() != c.dims.size())
        throw InternalError("subcomplex: layer count mismatch");
    const FieldSpec& F = c.field;
    SubcomplexResult out;
    out.complex.field = F;
    out.complex.min_degree = c.min_degree;
    out.inclusion.min_degree = c.min_degree;
    for (size_t i = 0; i < layers.size(); ++i) {
        int n = c.min_degree + static_cast<int>(i);
        if (layers[i].ambient() != c.dims[i])
            throw InternalError("subcomplex: layer ambient mismatch at degree " +
                                std::to_string(n));
        out.complex.dims.push_back(layers[i].dim());
        out.inclusion.maps.push_back(layers[i].basis().transpose());
        // restricted differential in layer coordinates
        int rdim = (i == 0) ? 0 : layers[i - 1].dim();
        Matrix dm(F, rdim, layers[i].dim());
        for (int s = 0; s < layers[i].dim(); ++s) {
            auto w = c.d[i].apply(layers[i].basis().row(s));
            if (i == 0) {
                for (const auto& x : w)
                    if (!F.is_zero(x))
                        throw InternalError("subcomplex: not closed under d at the bottom");
                continue;
            }
            auto coords = layers[i - 1].coords(w);
            if (!coords)
                throw InternalError("subcomplex: d leaves the layer at degree " +
                                    std::to_string(n));
            for (int r = 0; r < rdim; ++r) dm.at(r, s) = (*coords)[r];
        }
        out.complex.d.push_back(std::move(dm));
    }
    out.complex.certified_degree = std::min(c.certified_degree, out.complex.default_certified());
    validate_complex(out.complex);
    validate_chain_map(out.inclusion, out.complex, c);
    return out;
}

QuotientComplexResult quotient_complex(const ChainComplex& c, const std::vector<Subspace>& layers) {
    if (layers.size() != c.dims.size())
        throw InternalError("quotient_complex: layer count mismatch");
    const FieldSpec& F = c.field;
    QuotientComplexResult out;
    out.complex.field = F;
    out.complex.min_degree = c.min_degree;
    out.projection.min_degree = c.min_degree;
    for (size_t i = 0; i < layers.size(); ++i) {
        out.spaces.emplace_back(F, c.dims[i], layers[i]);
        out.complex.dims.push_back(out.spaces.back().dim());
        out.projection.maps.push_back(out.spaces.back().projection_matrix());
    }
    for (size_t i = 0; i < layers.size(); ++i) {
        if (i == 0) {
            out.complex.d.push_back(Matrix(F, 0, out.complex.dims[0]));
            continue;
        }
        out.complex.d.push_back(
            induced_map_on_quotients(c.d[i], out.spaces[i], out.spaces[i - 1]));
    }
    out.complex.certified_degree = std::min(c.certified_degree, out.complex.default_certified());
    validate_complex(out.complex);
    validate_chain_map(out.projection, c, out.complex);
    return out;
}

void validate_cochain(const CochainComplex& c) {
    if (c.delta.size() + 1 != c.dims.size() && !c.dims.empty())
        throw InternalError("cochain: need one delta per adjacent pair");
    for (size_t i = 0; i < c.delta.size(); ++i) {
        if (c.delta[i].cols() != c.dims[i] || c.delta[i].rows() != c.dims[i + 1])
            throw InternalError("cochain: delta^" + std::to_string(i) + " shape mismatch");
        if (i > 0 && !(c.delta[i] * c.delta[i - 1]).is_zero())
            throw InternalError("cochain: delta^" + std::to_string(i) + " o delta^" +
                                std::to_string(i - 1) + " != 0");
    }
}

HomologySpace cohomology_at(const CochainComplex& c, int n) {
    if (n > c.certified_degree)
        throw InternalError("cohomology requested above certified degree");
    const FieldSpec& F = c.field;
    int dn = c.dims[n];
    Matrix out = (n < static_cast<int>(c.delta.size())) ? c.delta[n] : Matrix(F, 0, dn);
    Matrix in = (n > 0) ? c.delta[n - 1] : Matrix(F, dn, 0);
    Subspace cocycles = Subspace::span(F, dn, kernel_basis(out));
    Subspace coboundaries = Subspace::span(F, dn, image_basis(in));
    return HomologySpace{n, Subquotient(cocycles, coboundaries)};
}

HomologyTable cohomology(const CochainComplex& c) {
    HomologyTable t;
    t.min_degree = 0;
    for (int n = 0; n <= c.certified_degree; ++n) t.dims.push_back(cohomology_at(c, n).dim());
    return t;
}

ExactnessReport check_exact_sequence(const std::vector<int>& dims,
                                     const std::vector<Matrix>& maps) {
    if (maps.size() + 1 != dims.size())
        throw InternalError("check_exact_sequence: need one map per adjacent pair");
    for (size_t i = 0; i < maps.size(); ++i)
        if (maps[i].rows() != dims[i + 1] || maps[i].cols() != dims[i])
            throw InternalError("check_exact_sequence: map " + std::to_string(i) +
                                " shape mismatch");
    ExactnessReport rep;
    for (size_t i = 0; i + 1 < maps.size(); ++i) {
        if (!(maps[i + 1] * maps[i]).is_zero()) {
            rep.exact = false;
            rep.detail = "composite at node " + std::to_string(i + 1) + " is nonzero";
            return rep;
        }
        int in = rank(maps[i]), outr = rank(maps[i + 1]);
        if (in + outr != dims[i + 1]) {
            rep.exact = false;
            rep.detail = "node " + std::to_string(i + 1) + ": rank_in " + std::to_string(in) +
                         " + rank_out " + std::to_string(outr) + " != dim " +
                         std::to_string(dims[i + 1]);
            return rep;
        }
    }
    return rep;
}

} // namespace exacthh
