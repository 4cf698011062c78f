#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "qrep/commutant.hpp"
#include "qrep/recoupling.hpp"

namespace qrep {

namespace {

struct Factor {
    std::vector<int> basis;  // summands
    Matrix e;                // basis x rank
    Matrix r;                // rank x basis
    int rank() const { return e.cols(); }
    int index(int s) const {
        for (int i = 0; i < static_cast<int>(basis.size()); ++i)
            if (basis[i] == s) return i;
        return -1;
    }
};

struct Tensor3 {
    int d0 = 0, d1 = 0, d2 = 0;
    std::vector<Scalar> v;
    Scalar& at(int i, int j, int k) { return v[(static_cast<std::size_t>(i) * d1 + j) * d2 + k]; }
    const Scalar& at(int i, int j, int k) const { return v[(static_cast<std::size_t>(i) * d1 + j) * d2 + k]; }
};

using TensorPtr = std::shared_ptr<const Tensor3>;

std::uint64_t key7(int a, int b, int c, int d, int e, int f, bool flag) {
    std::uint64_t k = flag ? 1 : 0;
    for (int x : {a, b, c, d, e, f}) k = (k << 8) | static_cast<std::uint64_t>(x);
    return k;
}

// Handle-by-handle contraction of the algebra net glued between two trees.
class Contractor {
public:
    Contractor(const Algebra& a, int variant, bool cached)
        : a_(a), cat_(*a.cat), cached_(cached), split_inverse_(variant == 1), merge_inverse_(variant == 0) {
        if (variant != 0 && variant != 1) throw std::invalid_argument("triangulation variant must be 0 or 1");
    }

    Scalar element(int genus, const TreeLabels& in, const TreeLabels& out) {
        const auto ho = handles_of(genus, in), hn = handles_of(genus, out);
        std::vector<Scalar> vec{cat_.one()};
        int co = 0, cn = 0;
        for (int h = 0; h < genus; ++h) {
            TensorPtr ts = split(co, ho[h].x, ho[h].a, cn, hn[h].x, hn[h].a, h == 0);
            if (!ts) return cat_.zero();
            TensorPtr tm = merge(ho[h].x, ho[h].a, ho[h].c, hn[h].x, hn[h].a, hn[h].c, h == genus - 1);
            if (!tm) return cat_.zero();
            std::vector<Scalar> next(tm->d2, cat_.zero());
            for (int g = 0; g < ts->d0; ++g) {
                if (vec[g].is_zero()) continue;
                for (int al = 0; al < ts->d1; ++al)
                    for (int be = 0; be < ts->d2; ++be) {
                        const Scalar& s = ts->at(g, al, be);
                        if (s.is_zero()) continue;
                        Scalar w = vec[g] * s;
                        for (int c = 0; c < tm->d2; ++c) {
                            const Scalar& t = tm->at(al, be, c);
                            if (!t.is_zero()) next[c] += w * t;
                        }
                    }
            }
            vec = std::move(next);
            co = ho[h].c;
            cn = hn[h].c;
        }
        Scalar total = cat_.zero();
        for (const auto& x : vec) total += x;
        return total;
    }

private:
    // Projector blocks take the chirality opposite to the crossing at the split vertex.
    const Factor& factor(int u, int v) {
        const std::uint64_t key = (static_cast<std::uint64_t>(u) << 8) | static_cast<std::uint64_t>(v);
        {
            std::shared_lock lock(mu_);
            auto it = factors_.find(key);
            if (it != factors_.end()) return *it->second;
        }
        auto f = std::make_shared<Factor>();
        auto block = endofunctor_block(a_, u, v, !split_inverse_);
        f->basis = block.basis;
        if (!block.basis.empty()) std::tie(f->e, f->r) = rank_factorization(block.matrix);
        std::unique_lock lock(mu_);
        return *factors_.emplace(key, f).first->second;
    }

    Scalar coproduct(int y, int y1, int y2) const {
        if (y >= 0) return a_.Delta(y, y1, y2);
        Scalar c = cat_.zero();
        for (int u : a_.summands_with_label(0))
            if (!a_.unit[u].is_zero()) c += a_.unit[u] * a_.Delta(u, y1, y2);
        return c;
    }

    template <class Build>
    TensorPtr memo(std::unordered_map<std::uint64_t, TensorPtr>& cache, std::uint64_t key, Build&& build) {
        if (!cached_) return build();
        {
            std::shared_lock lock(mu_);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        TensorPtr t = build();
        std::unique_lock lock(mu_);
        return cache.emplace(key, t).first->second;
    }

    // Chain strand (cold -> cnew) splits into the handle strands; T[chain, x-side, a-side].
    TensorPtr split(int cold, int x, int a, int cnew, int xn, int an, bool first) {
        return memo(split_, key7(cold, x, a, cnew, xn, an, first), [&]() -> TensorPtr {
            if (!cat_.fusion(x, a, cold) || !cat_.fusion(xn, an, cnew)) return nullptr;
            std::vector<int> chain;
            Matrix ec;
            if (first) {
                chain = {-1};
                ec = Matrix::identity(cat_.field(), 1);
            } else {
                const Factor& fc = factor(cold, cnew);
                if (fc.rank() == 0) return nullptr;
                chain = fc.basis;
                ec = fc.e;
            }
            const Factor& fx = factor(x, xn);
            const Factor& fa = factor(a, an);
            if (fx.rank() == 0 || fa.rank() == 0) return nullptr;
            auto t = std::make_shared<Tensor3>();
            t->d0 = ec.cols();
            t->d1 = fx.rank();
            t->d2 = fa.rank();
            t->v.assign(static_cast<std::size_t>(t->d0) * t->d1 * t->d2, cat_.zero());
            const Scalar one = cat_.one();
            for (int yi = 0; yi < static_cast<int>(chain.size()); ++yi) {
                const int y = chain[yi];
                const int ly = y < 0 ? 0 : a_.label[y];
                FusionState s1 = FusionState::basis(cat_, {ly, cold}, {ly, cnew}).split(1, x, a, one);
                for (int i1 = 0; i1 < static_cast<int>(fx.basis.size()); ++i1)
                    for (int i2 = 0; i2 < static_cast<int>(fa.basis.size()); ++i2) {
                        const int y1 = fx.basis[i1], y2 = fa.basis[i2];
                        const int l1 = a_.label[y1], l2 = a_.label[y2];
                        if (!cat_.fusion(l1, l2, ly)) continue;
                        Scalar cf = coproduct(y, y1, y2);
                        if (cf.is_zero()) continue;
                        Scalar base = s1.split(0, l1, l2, cf)
                                          .braid(1, split_inverse_)
                                          .fuse(0, xn, one)
                                          .fuse(1, an, one)
                                          .amplitude({xn, an}, {xn, cnew});
                        if (base.is_zero()) continue;
                        for (int g = 0; g < t->d0; ++g) {
                            if (ec(yi, g).is_zero()) continue;
                            Scalar bg = base * ec(yi, g);
                            for (int al = 0; al < t->d1; ++al) {
                                if (fx.r(al, i1).is_zero()) continue;
                                Scalar ba = bg * fx.r(al, i1);
                                for (int be = 0; be < t->d2; ++be)
                                    if (!fa.r(be, i2).is_zero()) t->at(g, al, be) += ba * fa.r(be, i2);
                            }
                        }
                    }
            }
            return t;
        });
    }

    // Handle strands merge back into the chain strand (cold -> cnew); T[x-side, a-side, chain].
    TensorPtr merge(int x, int a, int cold, int xn, int an, int cnew, bool last) {
        return memo(merge_, key7(x, a, cold, xn, an, cnew, last), [&]() -> TensorPtr {
            if (!cat_.fusion(x, a, cold) || !cat_.fusion(xn, an, cnew)) return nullptr;
            const Factor& fx = factor(x, xn);
            const Factor& fa = factor(a, an);
            if (fx.rank() == 0 || fa.rank() == 0) return nullptr;
            std::vector<int> chain;
            Matrix rc;
            if (last) {
                chain = a_.summands_with_label(0);
                rc = Matrix(cat_.field(), 1, static_cast<int>(chain.size()));
                for (int i = 0; i < static_cast<int>(chain.size()); ++i) rc(0, i) = a_.counit[chain[i]];
            } else {
                const Factor& fc = factor(cold, cnew);
                if (fc.rank() == 0) return nullptr;
                chain = fc.basis;
                rc = fc.r;
            }
            auto t = std::make_shared<Tensor3>();
            t->d0 = fx.rank();
            t->d1 = fa.rank();
            t->d2 = rc.rows();
            t->v.assign(static_cast<std::size_t>(t->d0) * t->d1 * t->d2, cat_.zero());
            const Scalar one = cat_.one();
            const FusionState s0 = FusionState::basis(cat_, {xn, an}, {xn, cnew});
            for (int i1 = 0; i1 < static_cast<int>(fx.basis.size()); ++i1)
                for (int i2 = 0; i2 < static_cast<int>(fa.basis.size()); ++i2) {
                    const int y1 = fx.basis[i1], y2 = fa.basis[i2];
                    const int l1 = a_.label[y1], l2 = a_.label[y2];
                    FusionState s2 = s0.split(0, l1, x, one).split(2, l2, a, one).braid(1, merge_inverse_);
                    if (s2.empty()) continue;
                    for (int i3 = 0; i3 < static_cast<int>(chain.size()); ++i3) {
                        const int y3 = chain[i3];
                        Scalar mm = a_.M(y1, y2, y3);
                        if (mm.is_zero()) continue;
                        Scalar base = s2.fuse(0, a_.label[y3], mm)
                                          .fuse(1, cold, one)
                                          .fuse(0, cnew, one)
                                          .amplitude({cnew}, {cnew});
                        if (base.is_zero()) continue;
                        for (int al = 0; al < t->d0; ++al) {
                            if (fx.e(i1, al).is_zero()) continue;
                            Scalar ba = base * fx.e(i1, al);
                            for (int be = 0; be < t->d1; ++be) {
                                if (fa.e(i2, be).is_zero()) continue;
                                Scalar bb = ba * fa.e(i2, be);
                                for (int g = 0; g < t->d2; ++g)
                                    if (!rc(g, i3).is_zero()) t->at(al, be, g) += bb * rc(g, i3);
                            }
                        }
                    }
                }
            return t;
        });
    }

    const Algebra& a_;
    const Category& cat_;
    bool cached_;
    bool split_inverse_;
    bool merge_inverse_;
    std::shared_mutex mu_;
    std::unordered_map<std::uint64_t, std::shared_ptr<Factor>> factors_;
    std::unordered_map<std::uint64_t, TensorPtr> split_, merge_;
};

void check_genus(int genus) {
    if (genus < 1) throw std::invalid_argument("genus must be at least 1");
}

// The contraction uses vertices normalized against their duals, under which the
// (s s 0) vertex pair closing the last loop equals 1/d_s times the plain loop.
// Rescaling by d_s makes the genus-1 vectors the characters chi_i.
std::vector<Scalar> basis_weights(const Category& cat, const std::vector<TreeLabels>& basis) {
    std::vector<Scalar> w;
    w.reserve(basis.size());
    for (const auto& t : basis) w.push_back(cat.qdim(t.back()));
    return w;
}

Matrix assemble(const Algebra& a, int genus, int variant, bool cached, bool parallel) {
    check_genus(genus);
    const Category& cat = *a.cat;
    const auto basis = enumerate_basis(cat, genus);
    const auto w = basis_weights(cat, basis);
    std::vector<Scalar> winv;
    for (const auto& x : w) winv.push_back(x.inverse());
    const int n = static_cast<int>(basis.size());
    Contractor con(a, variant, cached);
    Matrix p(cat.field(), n, n);
    auto fill = [&](int col) {
        for (int row = 0; row < n; ++row) {
            Scalar v = con.element(genus, basis[col], basis[row]);
            if (!v.is_zero()) p(row, col) = v * w[col] * winv[row];
        }
    };
    if (parallel) {
#ifdef QREP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int col = 0; col < n; ++col) fill(col);
    } else {
        for (int col = 0; col < n; ++col) fill(col);
    }
    return p;
}

}  // namespace

Matrix p_matrix(const Algebra& a, int genus, int variant) { return assemble(a, genus, variant, true, true); }

Matrix p_matrix_serial(const Algebra& a, int genus, int variant) { return assemble(a, genus, variant, false, false); }

std::vector<Scalar> p_apply(const Algebra& a, int genus, const std::vector<Scalar>& v, int variant) {
    check_genus(genus);
    const auto basis = enumerate_basis(*a.cat, genus);
    const int n = static_cast<int>(basis.size());
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector length does not match the basis");
    const auto w = basis_weights(*a.cat, basis);
    Contractor con(a, variant, true);
    std::vector<Scalar> out(n, a.cat->zero());
    for (int col = 0; col < n; ++col) {
        if (v[col].is_zero()) continue;
        std::vector<Scalar> column(n, a.cat->zero());
#ifdef QREP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int row = 0; row < n; ++row) column[row] = con.element(genus, basis[col], basis[row]);
        const Scalar vc = v[col] * w[col];
        for (int row = 0; row < n; ++row)
            if (!column[row].is_zero()) out[row] += column[row] * vc;
    }
    for (int row = 0; row < n; ++row)
        if (!out[row].is_zero()) out[row] = out[row] * w[row].inverse();
    return out;
}

}  // namespace qrep
