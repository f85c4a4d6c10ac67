#include "loops/cayley.hpp"

#include <algorithm>

namespace loops {

Perm CayleyTable::left_translation(Elem x) const {
    check_range(x);
    const Elem* row = mul_row(x);
    return Perm(row, row + n_);
}

Perm CayleyTable::right_translation(Elem x) const {
    check_range(x);
    const Elem* col = mul_col(x);
    return Perm(col, col + n_);
}

Elem CayleyTable::ipow(Elem x, long k) const {
    check_range(x);
    Elem v = x;
    if (k >= 0) {
        for (long i = 0; i < k; ++i) v = linv(v);
    } else {
        for (long i = 0; i < -k; ++i) v = rinv(v);
    }
    return v;
}

void CayleyTable::build_aux() {
    const int n = n_;
    ldiv_.assign((std::size_t)n * n, 0);
    rdiv_.assign((std::size_t)n * n, 0);
    mul_t_.assign((std::size_t)n * n, 0);
    rdiv_t_.assign((std::size_t)n * n, 0);
    for (int x = 0; x < n; ++x) {
        const Elem* row = &mul_[(std::size_t)x * n];
        for (int y = 0; y < n; ++y) {
            Elem p = row[y];
            ldiv_[(std::size_t)x * n + p] = (Elem)y;   // x \ (x*y) = y
            rdiv_[(std::size_t)p * n + y] = (Elem)x;   // (x*y) / y = x
            mul_t_[(std::size_t)y * n + x] = p;
            rdiv_t_[(std::size_t)y * n + p] = (Elem)x;
        }
    }
}

CayleyTable CayleyTable::validate(const std::vector<std::vector<Elem>>& rows, std::string label,
                                  bool relabel) {
    const int n = static_cast<int>(rows.size());
    if (n < 1 || n > kMaxOrder)
        throw TableError(TableError::Kind::BadShape, -1,
                         "table order must be in [1, " + std::to_string(kMaxOrder) + "], got " +
                             std::to_string(n));
    std::vector<Elem> flat;
    flat.reserve((std::size_t)n * n);
    for (int i = 0; i < n; ++i) {
        if ((int)rows[i].size() != n)
            throw TableError(TableError::Kind::BadShape, i,
                             "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(n));
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return validate_flat(std::move(flat), n, std::move(label), relabel);
}

CayleyTable CayleyTable::validate_flat(std::vector<Elem> mul, int n, std::string label,
                                       bool relabel) {
    if (n < 1 || n > kMaxOrder || (std::size_t)n * n != mul.size())
        throw TableError(TableError::Kind::BadShape, -1, "table is not n x n");
    for (std::size_t i = 0; i < mul.size(); ++i)
        if (mul[i] >= n)
            throw TableError(TableError::Kind::BadEntry, (int)(i / n),
                             "entry " + std::to_string(mul[i]) + " at row " +
                                 std::to_string(i / n) + " out of range [0, " +
                                 std::to_string(n) + ")");

    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j) {
            Elem v = mul[(std::size_t)i * n + j];
            if (seen[v])
                throw TableError(TableError::Kind::RowNotPermutation, i,
                                 "row " + std::to_string(i) + " is not a permutation (value " +
                                     std::to_string(v) + " repeats)");
            seen[v] = 1;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < n; ++i) {
            Elem v = mul[(std::size_t)i * n + j];
            if (seen[v])
                throw TableError(TableError::Kind::ColNotPermutation, j,
                                 "column " + std::to_string(j) + " is not a permutation (value " +
                                     std::to_string(v) + " repeats)");
            seen[v] = 1;
        }
    }

    // Identity: e with e*x = x*e = x for all x.
    int e = -1;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j = 0; j < n; ++j)
            if (mul[(std::size_t)i * n + j] != j) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int j = 0; j < n && ok; ++j)
            if (mul[(std::size_t)j * n + i] != j) ok = false;
        if (ok) {
            e = i;
            break;
        }
    }
    if (e < 0)
        throw TableError(TableError::Kind::NoIdentity, -1, "table has no two-sided identity");
    if (e != 0) {
        if (!relabel)
            throw TableError(TableError::Kind::IdentityNotZero, e,
                             "identity element is " + std::to_string(e) +
                                 ", not 0 (pass relabel to conjugate it into place)");
        // Conjugate by the transposition (0 e).
        auto sw = [&](Elem v) -> Elem {
            if (v == 0) return (Elem)e;
            if (v == e) return 0;
            return v;
        };
        std::vector<Elem> out((std::size_t)n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out[(std::size_t)i * n + j] = sw(mul[(std::size_t)sw((Elem)i) * n + sw((Elem)j)]);
        mul = std::move(out);
    }

    CayleyTable t;
    t.n_ = n;
    t.label_ = std::move(label);
    t.mul_ = std::move(mul);
    t.build_aux();
    return t;
}

InverseMaps inverse_maps(const CayleyTable& t, Elem x) {
    t.check_range(x);
    InverseMaps m;
    m.i = t.linv(x);
    m.j = t.rinv(x);
    m.eta_xj = t.mul(x, m.j);
    m.eta_ix = t.mul(m.i, x);
    m.eta_agree = m.eta_xj == m.eta_ix;
    return m;
}

CayleyTable cyclic_table(int n) {
    std::vector<Elem> mul((std::size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul[(std::size_t)i * n + j] = (Elem)((i + j) % n);
    return CayleyTable::validate_flat(std::move(mul), n, "C" + std::to_string(n));
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<Elem> mul((std::size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem ai = (Elem)(i / nb), bi = (Elem)(i % nb);
            Elem aj = (Elem)(j / nb), bj = (Elem)(j % nb);
            mul[(std::size_t)i * n + j] = (Elem)(a.mul(ai, aj) * nb + b.mul(bi, bj));
        }
    return CayleyTable::validate_flat(std::move(mul), n, a.label() + "x" + b.label());
}

}  // namespace loops
