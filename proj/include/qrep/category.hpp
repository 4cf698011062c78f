#pragma once

#include <array>
#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qrep/matrix.hpp"

namespace qrep {

// Structural data of the su(2)_k ribbon category: labels 0..k (twice the spin).
class Category {
public:
    explicit Category(int level);

    int level() const { return k_; }
    int rank() const { return k_ + 1; }
    const FieldPtr& field() const { return field_; }
    std::vector<int> labels() const;

    bool fusion(int a, int b, int c) const;
    std::vector<int> fusion_product(int a, int b) const;
    int dual(int a) const { return a; }
    std::vector<int> picard() const { return {0, k_}; }
    // Label of U_k (x) U_a.
    int simple_current_action(int a) const { return k_ - a; }

    const Scalar& qint(int n) const;
    const Scalar& qfact(int n) const;
    const Scalar& qfact_inv(int n) const;
    const Scalar& qdim(int a) const { return qint(a + 1); }
    const Scalar& twist(int a) const { return twist_[a]; }
    Scalar zero() const { return Scalar::zero(field_); }
    Scalar one() const { return Scalar::one(field_); }
    Scalar root(long power) const { return Scalar::root(field_, power); }

    // Global dimension D with D^2 = sum d_i^2.
    const Scalar& global_dim() const { return global_dim_; }
    const Matrix& smatrix() const { return smatrix_; }
    Matrix tmatrix() const;
    long verlinde_dim(int genus) const;

    // Square of the vertex normalization: [(a+b-c)/2]![(a-b+c)/2]![(-a+b+c)/2]! / [(a+b+c)/2+1]!.
    Scalar delta_sq(int a, int b, int c) const;

    // Recoupling ((ab)_e c)_d = sum_f F[e,f] (a(bc)_f)_d in the normalized vertex gauge.
    Scalar F(int a, int b, int c, int d, int e, int f) const;
    // Inverse block entry F^{-1}[f,e].
    Scalar Finv(int a, int b, int c, int d, int f, int e) const;
    // Coefficient of the tree with intermediate e2 after passing a over b (under if inverse)
    // between the intermediate labels pp and pn, starting from intermediate pj.
    Scalar braid_move(int pp, int a, int b, int pn, int pj, int e2, bool inverse) const;
    // Braiding eigenvalue on the c-channel of a (x) b.
    Scalar R(int a, int b, int c) const;
    Scalar Rinv(int a, int b, int c) const;

    // Number of F entries currently memoized.
    std::size_t cache_size() const;
    // Memoized F and Finv entries sorted by key, and reinsertion of saved entries.
    std::vector<std::pair<std::uint64_t, Scalar>> f_entries() const;
    void seed_f(std::uint64_t key, const Scalar& value) const;

private:
    Scalar racah_sum(int a, int b, int e, int c, int d, int f) const;
    Scalar racah_terms(const std::array<int, 4>& t, const std::array<int, 3>& p) const;
    Scalar compute_F(int a, int b, int c, int d, int e, int f) const;

    int k_;
    FieldPtr field_;
    std::vector<Scalar> qint_, qfact_, qfact_inv_, twist_;
    Scalar global_dim_;
    Matrix smatrix_;

    template <class Fn>
    Scalar memo(std::unordered_map<std::uint64_t, Scalar>& cache, std::uint64_t key, Fn&& compute) const;

    std::vector<Scalar> delta_sq_;
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<std::uint64_t, Scalar> fcache_, racah_cache_, braid_cache_;
};

// Field order used for level k.
int field_order_for_level(int level);

}  // namespace qrep
