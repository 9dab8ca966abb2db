#pragma once

#include <coxl2/coxeter.hpp>
#include <coxl2/polynomial.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coxl2 {

using Face = std::vector<int>;  // sorted vertex indices

/**
 * Finite abstract simplicial complex. Faces are closed under subsets and the
 * empty face is always present. Faces are listed by dimension, then
 * lexicographically.
 */
class SimplicialComplex {
public:
    SimplicialComplex() : SimplicialComplex(std::vector<std::string>{}, {}) {}
    SimplicialComplex(std::vector<std::string> labels, const std::vector<Face>& facets);

    std::size_t num_vertices() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }  // -1: only the empty face
    /** Faces of dimension d (d = -1 gives the empty face). */
    const std::vector<Face>& faces(int d) const;
    std::vector<Face> all_faces() const;  // nonempty faces
    bool has_face(const Face& f) const;
    int index_of(const Face& f) const;  // index within its dimension, -1 if absent
    std::vector<Face> facets() const;

    /** f_{-1}, f_0, ..., f_dim */
    std::vector<long> f_vector() const;
    long euler_characteristic() const;  // unreduced, nonempty faces

    SimplicialComplex full_subcomplex(const std::vector<bool>& vertices) const;
    std::string to_string() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Face>> by_dim_;  // by_dim_[d+1]
    std::vector<std::map<Face, int>> index_;
};

Polynomial f_polynomial(const SimplicialComplex& l);
/** h_L(t) = (1-t)^n f_L(t/(1-t)); requires dim L = n-1. */
Polynomial h_polynomial(const SimplicialComplex& l, int n);

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& a);
SimplicialComplex suspension(const SimplicialComplex& a);
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex points(int k);
SimplicialComplex polygon(int m);
SimplicialComplex path_complex(int l);  // I_l: l vertices
SimplicialComplex octahedron(int n);    // boundary of the n-octahedron, n-fold join of S^0
SimplicialComplex empty_complex();

/** Relative rational cohomology dims b^i(Z, A), i = 0..dim Z, where A is the
 *  subcomplex of faces satisfying in_a (closed under faces). */
std::vector<long> relative_betti(const SimplicialComplex& z, const std::function<bool(const Face&)>& in_a);

/**
 * Simplicial complex Z with a full subcomplex Z_s (given by its vertex set)
 * for each generator s.
 */
class MirroredComplex {
public:
    MirroredComplex(SimplicialComplex base, std::vector<std::vector<bool>> mirror_vertices);

    const SimplicialComplex& base() const { return base_; }
    std::size_t num_generators() const { return mirrors_.size(); }
    const std::vector<bool>& mirror(int s) const { return mirrors_[s]; }
    /** S(c) = {s : c lies in Z_s}. */
    Subset type(const Face& c) const;
    /** Z_T empty whenever T is not spherical. Throws InvalidArgument naming the offending vertex. */
    void validate(const CoxeterSystem& w) const;
    bool in_union(const Face& c, Subset u) const;  // c in Z^U
    /** b^i(Z, Z^U). For the chamber this is read off the nerve:
     *  K is contractible and K^U is homotopy equivalent to L_U. */
    std::vector<long> relative_betti(Subset u) const;
    /** b^i(Z, Z^U) from the cochains of Z itself. */
    std::vector<long> relative_betti_direct(Subset u) const;
    /** chi(Z_T) - chi(dZ_T) = sum over faces with S(c) = T of (-1)^dim c */
    std::map<Subset, long> type_census() const;

private:
    friend MirroredComplex chamber(const CoxeterSystem& w);
    SimplicialComplex base_;
    std::vector<std::vector<bool>> mirrors_;
    std::optional<SimplicialComplex> nerve_;  // set for chambers only
};

SimplicialComplex nerve(const CoxeterSystem& w);
/** Order complex of the spherical poset with mirrors K_s = chains in S_{>= {s}}. */
MirroredComplex chamber(const CoxeterSystem& w);

/**
 * Text format:
 *   vertices: a b c
 *   facets:
 *   a b
 *   b c
 *   mirror s: a
 *   mirror t: c
 * Mirrors refer to generator labels of the given system; missing mirrors are empty.
 */
MirroredComplex parse_mirrored_complex(const std::string& text, const CoxeterSystem& w);

}  // namespace coxl2
