#pragma once

#include <cstddef>
#include <stdexcept>

#include "charp/monomial.hpp"

namespace charp {

enum class OrderKind { Grevlex, Lex, Block };

/// Total, multiplicative well-ordering on monomials of a fixed ring.
/// Block is the product order (grevlex on vars [0,split), then grevlex on the
/// rest) used to eliminate a leading block of variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::size_t split = 0; // Block only: first block is vars [0, split)

    static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder elimination(std::size_t split) { return {OrderKind::Block, split}; }

    /// Sign of a <=> b: positive when a is the larger monomial.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case OrderKind::Grevlex: return cmp_grevlex(a, b, 0, a.nvars());
            case OrderKind::Lex: return cmp_lex(a, b);
            case OrderKind::Block: {
                if (split > a.nvars())
                    throw std::invalid_argument("MonomialOrder: block split out of range");
                int c = cmp_grevlex(a, b, 0, split);
                if (c != 0) return c;
                return cmp_grevlex(a, b, split, a.nvars());
            }
        }
        return 0;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && (a.kind != OrderKind::Block || a.split == b.split);
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

private:
    static int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        Exp da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    static int cmp_lex(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
};

} // namespace charp
