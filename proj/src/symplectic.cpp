#include "cmposet/symplectic.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include "cmposet/parallel.hpp"

namespace cmposet {

SymplecticModule::SymplecticModule(ScalarRing ring, IntMatrix gram) : ring_(ring), gram_(reduce(ring, std::move(gram))) {
    if (gram_.rows() != gram_.cols()) throw SymplecticError("Gram matrix is not square");
    for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
        if (gram_(i, i) != 0) throw SymplecticError("Gram matrix has a nonzero diagonal entry");
        for (Eigen::Index j = 0; j < i; ++j)
            if (ring_.add(gram_(i, j), gram_(j, i)) != 0) throw SymplecticError("Gram matrix is not skew-symmetric");
    }
    if (ring_.is_field()) {
        genus_ = static_cast<int>(cmposet::rank(ring_, gram_)) / 2;
    } else {
        const auto s = smith_invariants_dense(gram_);
        if (!s.torsion.empty()) throw SymplecticError("form is not quasi-unimodular (cokernel has torsion)");
        genus_ = static_cast<int>(s.rank) / 2;
    }
}

SymplecticModule SymplecticModule::standard(const ScalarRing& ring, int genus, int radical_rank) {
    if (genus < 0 || radical_rank < 0) throw SymplecticError("negative genus or radical rank");
    const int n = 2 * genus + radical_rank;
    IntMatrix g = IntMatrix::Zero(n, n);
    for (int i = 0; i < genus; ++i) {
        g(2 * i, 2 * i + 1) = 1;
        g(2 * i + 1, 2 * i) = -1;
    }
    return SymplecticModule(ring, g);
}

std::int64_t SymplecticModule::pair(const IntVector& a, const IntVector& b) const {
    std::int64_t s = 0;
    for (Eigen::Index i = 0; i < gram_.rows(); ++i) {
        if (a(i) == 0) continue;
        for (Eigen::Index j = 0; j < gram_.cols(); ++j)
            if (gram_(i, j) != 0 && b(j) != 0) s = ring_.add(s, ring_.mul(a(i), ring_.mul(gram_(i, j), b(j))));
    }
    return s;
}

IntMatrix SymplecticModule::pairing(const IntMatrix& a, const IntMatrix& b) const {
    return multiply(ring_, multiply(ring_, a, gram_), b.transpose());
}

IntMatrix SymplecticModule::gram_of(const IntMatrix& rows) const { return pairing(rows, rows); }

std::string SymplecticModule::describe() const {
    std::ostringstream os;
    os << ring_.name() << "^" << rank() << " genus " << genus_ << " radical " << rank() - 2 * genus_;
    return os.str();
}

Submodule Submodule::span(const ScalarRing& ring, int ambient_rank, const IntMatrix& generators) {
    if (generators.cols() != ambient_rank) throw SymplecticError("generators have the wrong length");
    Submodule s;
    s.ring_ = ring;
    const IntMatrix g = reduce(ring, generators);
    s.basis_ = ring.is_field() ? echelon(ring, g) : echelon(ring, saturate(ring, g));
    if (s.basis_.rows() == 0) s.basis_ = IntMatrix(0, ambient_rank);
    return s;
}

Submodule Submodule::zero(const ScalarRing& ring, int ambient_rank) { return span(ring, ambient_rank, IntMatrix(0, ambient_rank)); }

Submodule Submodule::whole(const ScalarRing& ring, int ambient_rank) {
    return span(ring, ambient_rank, IntMatrix::Identity(ambient_rank, ambient_rank));
}

Submodule Submodule::from_canonical(const ScalarRing& ring, IntMatrix basis) {
    Submodule s = span(ring, static_cast<int>(basis.cols()), basis);
    if (s.basis_ != basis) throw SymplecticError("basis is not in canonical form");
    return s;
}

bool Submodule::contains(const IntVector& v) const {
    IntMatrix stacked(basis_.rows() + 1, basis_.cols());
    stacked << basis_, v.transpose();
    return cmposet::rank(ring_, stacked) == static_cast<std::size_t>(basis_.rows());
}

bool Submodule::contains(const Submodule& s) const {
    if (s.rank() > rank()) return false;
    IntMatrix stacked(basis_.rows() + s.basis_.rows(), basis_.cols());
    stacked << basis_, s.basis_;
    return cmposet::rank(ring_, stacked) == static_cast<std::size_t>(basis_.rows());
}

std::string Submodule::key() const {
    const bool digits = ring_.is_field() && ring_.characteristic() <= 10;
    std::string out = "[";
    for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
        if (i > 0) out += ",";
        for (Eigen::Index j = 0; j < basis_.cols(); ++j) {
            if (!digits && j > 0) out += " ";
            out += std::to_string(basis_(i, j));
        }
    }
    return out + "]";
}

std::size_t SubmoduleHash::operator()(const Submodule& s) const {
    std::size_t h = static_cast<std::size_t>(s.basis().rows()) * 0x9e3779b97f4a7c15ULL;
    for (Eigen::Index i = 0; i < s.basis().size(); ++i)
        h = (h ^ static_cast<std::size_t>(s.basis().data()[i])) * 0x100000001b3ULL;
    return h;
}

Submodule perp(const SymplecticModule& l, const Submodule& s) {
    const IntMatrix m = multiply(l.ring(), s.basis(), l.gram());
    return Submodule::span(l.ring(), l.rank(), right_kernel(l.ring(), m));
}

Submodule radical(const SymplecticModule& l) { return perp(l, Submodule::whole(l.ring(), l.rank())); }

Submodule sum(const Submodule& a, const Submodule& b) {
    IntMatrix stacked(a.basis().rows() + b.basis().rows(), a.ambient_rank());
    stacked << a.basis(), b.basis();
    return Submodule::span(a.ring(), a.ambient_rank(), stacked);
}

Submodule intersect(const Submodule& a, const Submodule& b) {
    const auto& r = a.ring();
    IntMatrix stacked(a.basis().rows() + b.basis().rows(), a.ambient_rank());
    stacked << a.basis(), b.basis();
    // rows (x, y) with x A + y B = 0 give the common vectors x A
    const IntMatrix k = right_kernel(r, IntMatrix(stacked.transpose()));
    const IntMatrix x = k.leftCols(a.basis().rows());
    return Submodule::span(r, a.ambient_rank(), multiply(r, x, a.basis()));
}

UnimodularTest unimodular_test(const SymplecticModule& l, const Submodule& s) {
    UnimodularTest t;
    const int k = s.rank();
    if (k == 0) {
        t.unimodular = true;
        return t;
    }
    if (k % 2 != 0) return t;
    const IntMatrix g = l.gram_of(s.basis());
    if (l.ring().is_field()) {
        t.unimodular = rank(l.ring(), g) == static_cast<std::size_t>(k);
    } else {
        const auto snf = smith_invariants_dense(g);
        t.unimodular = snf.rank == static_cast<std::size_t>(k) && snf.torsion.empty();
    }
    if (t.unimodular) t.genus = k / 2;
    return t;
}

RadicalQuotient quotient_by_radical(const SymplecticModule& l) {
    const auto& r = l.ring();
    Submodule rad = radical(l);
    const IntMatrix c = complete_basis(r, rad.basis());
    IntMatrix t(l.rank(), l.rank());
    t << c, rad.basis();
    const auto t_inv = inverse(r, t);
    if (!t_inv) throw SymplecticError("radical complement is not a basis");
    return RadicalQuotient{SymplecticModule(r, l.gram_of(c)), c, t_inv->leftCols(c.rows()), std::move(rad)};
}

bool is_isotropic_partial_basis(const SymplecticModule& l, const IntMatrix& vs) {
    if (vs.cols() != l.rank()) return false;
    const IntMatrix g = l.gram_of(vs);
    if (!g.isZero()) return false;
    const Submodule rad = radical(l);
    IntMatrix stacked(vs.rows() + rad.basis().rows(), l.rank());
    stacked << reduce(l.ring(), vs), rad.basis();
    return is_partial_basis(l.ring(), stacked);
}

RestrictedModule restrict_Lv(const SymplecticModule& l, const IntMatrix& vs) {
    if (!is_isotropic_partial_basis(l, vs))
        throw SymplecticError("vectors are not an isotropic sequence projecting to a partial basis");
    const IntMatrix m = multiply(l.ring(), reduce(l.ring(), vs), l.gram());
    Submodule carrier = Submodule::span(l.ring(), l.rank(), right_kernel(l.ring(), m));
    SymplecticModule module(l.ring(), l.gram_of(carrier.basis()));
    IntMatrix embedding = carrier.basis();
    return RestrictedModule{std::move(module), std::move(carrier), std::move(embedding)};
}

namespace {

// Calls fn on every k x n RREF matrix over F_p with the given pivot columns.
void for_each_rref(const ScalarRing& ring, int n, const std::vector<int>& pivots,
                   const std::function<void(const IntMatrix&)>& fn) {
    const int k = static_cast<int>(pivots.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < k; ++i)
        for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < n; ++c)
            if (!is_pivot[static_cast<std::size_t>(c)]) free.emplace_back(i, c);
    IntMatrix m = IntMatrix::Zero(k, n);
    for (int i = 0; i < k; ++i) m(i, pivots[static_cast<std::size_t>(i)]) = 1;
    const std::int64_t p = ring.characteristic();
    for (;;) {
        fn(m);
        std::size_t pos = 0;
        while (pos < free.size()) {
            auto [i, c] = free[pos];
            if (++m(i, c) < p) break;
            m(i, c) = 0;
            ++pos;
        }
        if (pos == free.size()) return;
    }
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c < n; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<IntMatrix> enumerate_subspaces(const ScalarRing& ring, int n, int k) {
    if (!ring.enumerable()) throw SymplecticError("ring " + ring.name() + " is not enumerable");
    std::vector<IntMatrix> out;
    for (const auto& piv : combinations(n, k)) for_each_rref(ring, n, piv, [&](const IntMatrix& m) { out.push_back(m); });
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Submodule> enumerate_unimodular_submodules(const SymplecticModule& l, unsigned workers) {
    const auto& ring = l.ring();
    if (!ring.enumerable()) throw SymplecticError("ring " + ring.name() + " is not enumerable");
    const int n = l.rank();
    std::vector<std::vector<int>> tasks;
    for (int k = 0; k <= n; k += 2)
        for (auto& piv : combinations(n, k)) tasks.push_back(std::move(piv));
    std::vector<std::vector<Submodule>> found(tasks.size());
    parallel_for(tasks.size(), workers, [&](std::size_t t) {
        const auto k = static_cast<std::size_t>(tasks[t].size());
        for_each_rref(ring, n, tasks[t], [&](const IntMatrix& m) {
            if (k == 0 || rank(ring, l.gram_of(m)) == k) found[t].push_back(Submodule::span(ring, n, m));
        });
    });
    std::vector<Submodule> out;
    for (auto& f : found) out.insert(out.end(), f.begin(), f.end());
    std::sort(out.begin(), out.end());
    return out;
}

CompletionCertificate unimodular_completion(const SymplecticModule& l, const Submodule& u, const IntMatrix& vs,
                                            const Submodule& u_prime) {
    const auto& r = l.ring();
    const int n = l.rank();
    const auto k1 = static_cast<int>(vs.rows());
    const auto tu = unimodular_test(l, u);
    if (!tu.unimodular || tu.genus != k1) throw SymplecticError("u must be unimodular of genus |v|");
    if (!is_isotropic_partial_basis(l, vs)) throw SymplecticError("v is not an isotropic partial basis of the quotient");
    const auto tp = unimodular_test(l, u_prime);
    if (!tp.unimodular) throw SymplecticError("u' is not unimodular");
    if (!l.pairing(u_prime.basis(), reduce(r, vs)).isZero()) throw SymplecticError("u' is not contained in L_v");

    const Submodule rad = radical(l);
    const IntMatrix bu = u.basis();
    CompletionCertificate cert;

    // e_i in u with e_i - v_i in the radical
    IntMatrix sys(bu.rows() + rad.basis().rows(), n);
    sys << bu, rad.basis();
    const IntMatrix sys_t = sys.transpose();
    cert.e = IntMatrix(k1, n);
    for (int i = 0; i < k1; ++i) {
        const auto x = solve(r, sys_t, reduce(r, IntMatrix(vs.row(i))).transpose());
        if (!x) throw SymplecticError("v is not contained in the image of u");
        cert.e.row(i) = multiply(r, IntMatrix(x->head(bu.rows()).transpose()), bu);
    }

    // f_i in u with <e_j, f_i> = delta_ij, then <f_i, f_j> = 0 by adding multiples of e
    const IntMatrix m = multiply(r, multiply(r, cert.e, l.gram()), bu.transpose());
    cert.f = IntMatrix(k1, n);
    for (int i = 0; i < k1; ++i) {
        IntVector target = IntVector::Zero(k1);
        target(i) = 1;
        const auto c = solve(r, m, target);
        if (!c) throw SymplecticError("cannot complete e to a symplectic basis of u");
        cert.f.row(i) = multiply(r, IntMatrix(c->transpose()), bu);
    }
    auto orthogonalize = [&](IntMatrix& f) {
        for (int j = 0; j < k1; ++j)
            for (int i = 0; i < j; ++i) {
                const std::int64_t c = l.pair(f.row(i).transpose(), f.row(j).transpose());
                for (int t = 0; t < n; ++t) f(j, t) = r.add(f(j, t), r.mul(c, cert.e(i, t)));
            }
    };
    orthogonalize(cert.f);

    // f'_i in u' with f_i - f'_i perpendicular to u'
    const IntMatrix bp = u_prime.basis();
    cert.corrected = cert.f;
    if (bp.rows() > 0) {
        const IntMatrix gp = l.gram_of(bp);
        const IntMatrix rhs = l.pairing(cert.f, bp);
        for (int i = 0; i < k1; ++i) {
            const auto c = solve(r, IntMatrix(gp.transpose()), rhs.row(i).transpose());
            if (!c) throw SymplecticError("u' is not unimodular");
            const IntMatrix fp = multiply(r, IntMatrix(c->transpose()), bp);
            for (int t = 0; t < n; ++t) cert.corrected(i, t) = r.sub(cert.corrected(i, t), fp(0, t));
        }
    }
    // (e; f - f') spans a unimodular lattice; one more pass makes it a symplectic basis
    orthogonalize(cert.corrected);

    IntMatrix tilde(2 * k1, n);
    tilde << cert.e, cert.corrected;
    IntMatrix expected = IntMatrix::Zero(2 * k1, 2 * k1);
    for (int i = 0; i < k1; ++i) {
        expected(i, k1 + i) = 1;
        expected(k1 + i, i) = r.neg(1);
    }
    cert.result = sum(u, u_prime);
    cert.genus = tp.genus + k1;
    const Submodule tilde_span = Submodule::span(r, n, tilde);
    if (reduce(r, l.gram_of(tilde)) != reduce(r, expected)) {
        cert.failure = "constructed basis is not symplectic";
    } else if (!l.pairing(tilde, bp).isZero()) {
        cert.failure = "constructed basis is not perpendicular to u'";
    } else if (sum(tilde_span, u_prime) != cert.result) {
        cert.failure = "constructed basis and u' do not span u + u'";
    } else {
        const auto t = unimodular_test(l, cert.result);
        if (!t.unimodular || t.genus != cert.genus)
            cert.failure = "u + u' is not unimodular of genus g(u') + |v|";
        else
            cert.verified = true;
    }
    return cert;
}

}  // namespace cmposet
