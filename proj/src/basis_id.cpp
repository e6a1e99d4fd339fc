#include "zonotopal/basis_id.hpp"

#include <algorithm>

namespace zonotopal {

bool BasisId::contains(std::size_t i) const { return std::binary_search(indices.begin(), indices.end(), i); }

namespace {

std::string join_one_based(const IndexSet& s, char open, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + close;
}

}  // namespace

std::string to_string(const BasisId& b) { return join_one_based(b.indices, '(', ')'); }

std::string index_set_to_string(const IndexSet& s) { return join_one_based(s, '{', '}'); }

}  // namespace zonotopal
