#pragma once

#include <coxl2/coxeter.hpp>

#include <optional>
#include <string>
#include <vector>

namespace coxl2 {

struct FiniteType {
    char family;        // 'A','B','D','E','F','H','I'
    unsigned rank;
    unsigned m = 0;     // for I2(m)
    std::string name() const;
    Integer order() const;
};

/** Connected components of the Coxeter diagram on T (edges where m_st != 2). */
std::vector<Subset> diagram_components(const CoxeterSystem& w, Subset t);

/** Finite types of the components of T, or nullopt when some component is infinite. */
std::optional<std::vector<FiniteType>> classify_finite(const CoxeterSystem& w, Subset t);

Integer finite_order(const std::vector<FiniteType>& types);

}  // namespace coxl2
