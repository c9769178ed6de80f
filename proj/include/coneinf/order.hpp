#pragma once

#include <string>

#include "coneinf/monomial.hpp"

namespace coneinf {

// Monomial orders. All are total, multiplicative and have 1 as the least
// monomial. Grevlex and grlex refine total degree. Block(k) is the
// elimination order that compares the first k exponents by grevlex and
// breaks ties by grevlex on the remaining ones; any monomial involving one
// of the first k variables is greater than any monomial free of them.
struct MonomialOrder {
    enum class Kind { grevlex, grlex, lex, block };

    Kind kind = Kind::grevlex;
    std::size_t block_size = 0; // only meaningful for Kind::block

    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder grlex() { return {Kind::grlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

    bool is_graded() const { return kind == Kind::grevlex || kind == Kind::grlex; }
    std::string name() const;

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && block_size == o.block_size;
    }
    bool operator<(const MonomialOrder& o) const {
        if (kind != o.kind) return kind < o.kind;
        return block_size < o.block_size;
    }

    // -1 if a < b, 0 if equal, 1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
};

} // namespace coneinf
