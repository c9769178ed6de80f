#include "coneinf/order.hpp"

#include <cassert>

namespace coneinf {

namespace {

int degree_range(const Monomial& m, std::size_t lo, std::size_t hi) {
    int d = 0;
    for (std::size_t i = lo; i < hi; ++i) d += static_cast<int>(m.exps[i]);
    return d;
}

// Graded reverse lexicographic on the variable range [lo, hi).
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    int da = degree_range(a, lo, hi), db = degree_range(b, lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
    }
    return 0;
}

int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

std::string MonomialOrder::name() const {
    switch (kind) {
        case Kind::grevlex: return "grevlex";
        case Kind::grlex: return "grlex";
        case Kind::lex: return "lex";
        case Kind::block: return "block(" + std::to_string(block_size) + ")";
    }
    return "?";
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    assert(a.nvars() == b.nvars());
    std::size_t n = a.nvars();
    switch (kind) {
        case Kind::grevlex:
            return grevlex_range(a, b, 0, n);
        case Kind::grlex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
            return lex_range(a, b, 0, n);
        }
        case Kind::lex:
            return lex_range(a, b, 0, n);
        case Kind::block: {
            std::size_t k = block_size;
            assert(k <= n);
            int c = grevlex_range(a, b, 0, k);
            if (c != 0) return c;
            return grevlex_range(a, b, k, n);
        }
    }
    return 0;
}

} // namespace coneinf
