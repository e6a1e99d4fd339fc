#ifndef ZONOTOPAL_BASIS_ID_HPP
#define ZONOTOPAL_BASIS_ID_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace zonotopal {

/// Sorted list of 0-based positions into a VectorList.
using IndexSet = std::vector<std::size_t>;

/// A basis selected from a VectorList: strictly increasing 0-based positions.
/// Printed and serialized 1-based, matching x_1..x_N.
struct BasisId {
    IndexSet indices;

    bool contains(std::size_t i) const;
    std::size_t size() const { return indices.size(); }

    friend auto operator<=>(const BasisId&, const BasisId&) = default;
};

/// "(1,3)" style, 1-based.
std::string to_string(const BasisId& b);
/// "{1,3}" style, 1-based.
std::string index_set_to_string(const IndexSet& s);

}  // namespace zonotopal

#endif
