#pragma once

#include <coxl2/complex.hpp>
#include <coxl2/coxeter.hpp>
#include <coxl2/rational_function.hpp>
#include <coxl2/roots.hpp>

#include <string>
#include <vector>

namespace coxl2 {

/** Simple undirected graph on labelled vertices. */
class Graph {
public:
    explicit Graph(std::vector<std::string> labels);
    Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void add_edge(int a, int b);
    bool adjacent(int a, int b) const { return adj_[a][b]; }
    std::size_t num_edges() const;
    /** All cliques, including the empty one, each sorted. */
    std::vector<Face> cliques() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> adj_;
};

Graph one_skeleton(const SimplicialComplex& l);
SimplicialComplex flag_complex(const Graph& g);
/** Every clique of the 1-skeleton spans a face. */
bool is_flag(const SimplicialComplex& l);

Graph cycle_graph(int m);
Graph icosahedron_graph();
/** 1-skeleton of the n-octahedron: n pairs of non-adjacent vertices. */
Graph octahedron_graph(int n);

/** m_st = 2 on edges and infinity otherwise; a single parameter class. */
CoxeterSystem racg_from_graph(const Graph& g);
/** Right-angled system whose nerve is the flag complex l. */
CoxeterSystem racg_from_complex(const SimplicialComplex& l);

/** chi_q(L) = f_L(-q/(1+q)) in the single variable q; requires L flag. */
RationalFunction chi_q(const SimplicialComplex& l);

struct HpolyCheck {
    bool equal = false;
    RationalFunction inverse_growth;  // 1/W(t) of the right-angled system
    RationalFunction from_h;          // h_L(-t)/(1+t)^n
    std::vector<Rational> h;          // h-vector
};
HpolyCheck verify_hpoly_identity(const SimplicialComplex& l, int n);

/**
 * L1 □ L2: remove the valence-4 vertices s1, s2 of two flag 2-spheres and
 * glue the remaining disks along their boundary squares, matching the link
 * cycles in order.
 */
SimplicialComplex square_sum(const SimplicialComplex& l1, int s1, const SimplicialComplex& l2, int s2);

/** Annulus with boundary polygons of k and m vertices and no interior vertices. */
SimplicialComplex staircase_annulus(int k, int m);

struct ExistenceComplexes {
    SimplicialComplex a;      // S A_{4,m} glued to I_4 * P_m
    SimplicialComplex a_hat;  // A with a cone on its boundary
    SimplicialComplex l;      // A doubled along its boundary
    std::vector<bool> m_vertices;  // the octahedral boundary M inside L
};
ExistenceComplexes existence_complexes(int m);

struct ExistenceReport {
    int k = 4, m = 0;
    RationalFunction chi_annulus, chi_suspended_annulus, chi_filling, chi_suspended_polygon, chi_a, chi_a_hat,
        chi_l;
    // the same Euler characteristics read off the constructed complexes
    RationalFunction chi_a_built, chi_a_hat_built, chi_l_built;
    std::vector<long> f_annulus;
    bool flag_l = false, flag_a_hat = false;
    std::vector<IsolatedRoot> roots_a_hat, roots_l;
};
ExistenceReport example_existence(int m);

}  // namespace coxl2
