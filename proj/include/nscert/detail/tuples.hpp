#pragma once

#include <cstdint>
#include <vector>

namespace nscert::detail {

/// Invokes fn with every tuple in [0,radix)^len, lexicographic order.
template <class F>
void for_each_tuple(int len, int radix, F&& fn) {
    std::vector<int> t(static_cast<std::size_t>(len), 0);
    if (len == 0) {
        fn(t);
        return;
    }
    if (radix <= 0)
        return;
    while (true) {
        fn(const_cast<const std::vector<int>&>(t));
        int pos = len - 1;
        while (pos >= 0 && t[pos] == radix - 1)
            t[pos--] = 0;
        if (pos < 0)
            return;
        ++t[pos];
    }
}

inline std::uint64_t tuple_rank(const std::vector<int>& t, int radix) {
    std::uint64_t r = 0;
    for (int v : t)
        r = r * static_cast<std::uint64_t>(radix) + static_cast<std::uint64_t>(v);
    return r;
}

} // namespace nscert::detail
