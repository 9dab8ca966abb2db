#pragma once

#include <coxl2/complex.hpp>
#include <coxl2/coxeter.hpp>

#include <string>
#include <vector>

namespace coxl2 {

/** Irreducible finite type by family letter: a b d e f h i (i takes m). */
CoxeterSystem finite_type_system(char family, int rank, unsigned m = 0);
/** Direct product; each factor keeps its classes, offset so factors never share one. */
CoxeterSystem product_system(const CoxeterSystem& a, const CoxeterSystem& b);

/**
 * Named systems. Accepted names: a<n>, b<n>, d<n>, e6..e8, f4, h3, h4,
 * i2-<m>, products such as a1xa1 or a2xb2, dihedral-infinite,
 * product-dihedral-<n>, octahedral, k-points-<k>, pentagon, polygon-<m>,
 * dodecahedral, triangle-(p,q,r) or triangle-p-q-r, example-existence-m<m>.
 */
CoxeterSystem builtin_system(const std::string& name);

struct CatalogEntry {
    std::string name;
    std::string description;
};
/** The named systems used by the verification battery. */
std::vector<CatalogEntry> builtin_catalog();

/** Path with two edges whose end vertices are the mirrors of the two generators of A1 x A1. */
MirroredComplex circle_complex(const CoxeterSystem& w);

}  // namespace coxl2
