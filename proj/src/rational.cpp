#include "nscert/rational.hpp"

#include <cctype>

namespace nscert {

Rat parse_rational(const std::string& text) {
    if (text.empty())
        throw SchemaError("empty rational literal");
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else if (c == '/' && seen_digit && !seen_slash && i + 1 < text.size()) {
            seen_slash = true;
        } else {
            throw SchemaError("bad rational literal: \"" + text + "\"");
        }
    }
    if (!seen_digit)
        throw SchemaError("bad rational literal: \"" + text + "\"");
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw SchemaError("bad rational literal: \"" + text + "\"");
    if (seen_slash && r.get_den() == 0)
        throw SchemaError("zero denominator in \"" + text + "\"");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rat& value) {
    return value.get_str();
}

double to_double(const Rat& value) {
    return value.get_d();
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("dot: length mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
    std::size_t rank = 0;
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[row], rows[pivot]);
        const Rat inv = 1 / rows[row][col];
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0)
                continue;
            const Rat factor = rows[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c)
                rows[r][c] -= factor * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> rational_kernel(const std::vector<std::vector<Rat>>& rows,
                                              std::size_t cols) {
    // Reduced row echelon form, then one kernel vector per free column.
    std::vector<std::vector<Rat>> m = rows;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        const Rat inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c)
            m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            const Rat factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;

    std::vector<std::vector<Rat>> kernel;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Rat> z(cols, Rat(0));
        z[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            z[pivot_col[r]] = -m[r][free_col];
        kernel.push_back(std::move(z));
    }
    return kernel;
}

} // namespace nscert
