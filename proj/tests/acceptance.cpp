// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "identities.hpp"
#include "oracles.hpp"
#include "qrep/commutant.hpp"
#include "qrep/modular_invariant.hpp"
#include "qrep/rig.hpp"

using namespace qrep;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail << "first failure: " << why << "; ";
        pass = false;
    }
    void require(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

std::map<int, CategoryPtr> categories;
std::map<std::pair<int, int>, Algebra> algebras;

CategoryPtr level(int k) {
    auto& c = categories[k];
    if (!c) c = std::make_shared<const Category>(k);
    return c;
}

const Algebra& ade(int k, Series s) {
    auto key = std::make_pair(k, static_cast<int>(s));
    auto it = algebras.find(key);
    if (it == algebras.end()) it = algebras.emplace(key, build_ade(level(k), s)).first;
    return it->second;
}

Series exceptional_at(int k) { return k == 10 ? Series::E6 : k == 16 ? Series::E7 : Series::E8; }

bool matches(const Matrix& z, const oracle::IntMatrix& ref) {
    if (z.rows() != static_cast<int>(ref.size())) return false;
    for (int i = 0; i < z.rows(); ++i)
        for (int j = 0; j < z.cols(); ++j)
            if (z(i, j) != Scalar(z.field(), ref[i][j])) return false;
    return true;
}

std::string lbl(const std::string& what, int k) { return what + " at k=" + std::to_string(k); }

// Pentagon on every admissible tuple at the level, enumerated along the fusion rules.
long pentagon_exhaustive(const Category& c, Outcome& o) {
    long n = 0;
    const int k = c.level();
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            for (int cc = 0; cc <= k; ++cc)
                for (int d = 0; d <= k; ++d)
                    for (int f : c.fusion_product(a, b))
                        for (int g : c.fusion_product(f, cc))
                            for (int e : c.fusion_product(g, d))
                                for (int l : c.fusion_product(cc, d)) {
                                    if (!c.fusion(f, l, e)) continue;
                                    for (int kk : c.fusion_product(b, l)) {
                                        if (!c.fusion(a, kk, e)) continue;
                                        ++n;
                                        if (!qtest::pentagon_holds(c, a, b, cc, d, e, f, g, kk, l)) {
                                            o.fail(lbl("pentagon", k));
                                            return n;
                                        }
                                    }
                                }
    return n;
}

long hexagon_exhaustive(const Category& c, Outcome& o) {
    long n = 0;
    const int k = c.level();
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            for (int cc = 0; cc <= k; ++cc)
                for (int e : c.fusion_product(a, cc))
                    for (int d : c.fusion_product(e, b))
                        for (int g : c.fusion_product(cc, b)) {
                            if (!c.fusion(a, g, d)) continue;
                            n += 2;
                            if (!qtest::hexagon_holds(c, a, b, cc, d, e, g, false) ||
                                !qtest::hexagon_holds(c, a, b, cc, d, e, g, true)) {
                                o.fail(lbl("hexagon", k));
                                return n;
                            }
                        }
    return n;
}

int pick(const std::vector<int>& v, std::mt19937& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

void random_identities(const Category& c, int samples, std::mt19937& rng, Outcome& o) {
    const int k = c.level();
    std::uniform_int_distribution<int> any(0, k);
    int done = 0;
    while (done < samples) {
        const int a = any(rng), b = any(rng), cc = any(rng), d = any(rng);
        const int f = pick(c.fusion_product(a, b), rng);
        const int g = pick(c.fusion_product(f, cc), rng);
        const int e = pick(c.fusion_product(g, d), rng);
        const int l = pick(c.fusion_product(cc, d), rng);
        const int kk = pick(c.fusion_product(b, l), rng);
        if (!c.fusion(f, l, e) || !c.fusion(a, kk, e)) continue;
        ++done;
        o.require(qtest::pentagon_holds(c, a, b, cc, d, e, f, g, kk, l), lbl("random pentagon", k));
        const int e2 = pick(c.fusion_product(a, cc), rng);
        const int d2 = pick(c.fusion_product(e2, b), rng);
        const int g2 = pick(c.fusion_product(cc, b), rng);
        o.require(qtest::hexagon_holds(c, a, b, cc, d2, e2, g2, false), lbl("random hexagon", k));
        o.require(qtest::hexagon_holds(c, a, b, cc, d2, e2, g2, true), lbl("random inverse hexagon", k));
    }
}

Outcome category_suite() {
    Outcome o;
    long pent = 0, hex = 0;
    for (int k = 0; k <= 6; ++k) {
        pent += pentagon_exhaustive(*level(k), o);
        hex += hexagon_exhaustive(*level(k), o);
    }
    std::mt19937 rng(20240601);
    for (int k = 7; k <= 16; ++k) random_identities(*level(k), 500, rng, o);
    for (int k = 0; k <= 8; ++k) {
        const Category& c = *level(k);
        const Matrix& s = c.smatrix();
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                for (int l = 0; l <= k; ++l) {
                    Scalar v = c.zero();
                    for (int m = 0; m <= k; ++m) v += s(i, m) * s(j, m) * s(l, m).conj() * s(0, m).inverse();
                    o.require(v == Scalar(c.field(), static_cast<long>(c.fusion(i, j, l))), lbl("Verlinde formula", k));
                }
        for (int g = 1; g <= 3; ++g) {
            o.require(c.verlinde_dim(g) == oracle::verlinde(k, g), lbl("Verlinde dimension", k));
            o.require(static_cast<long>(enumerate_basis(c, g).size()) == c.verlinde_dim(g), lbl("basis count", k));
        }
    }
    o.detail << pent << " pentagon and " << hex << " hexagon tuples exhaustively (k<=6), 500 random tuples per k in 7..16";
    return o;
}

Outcome algebra_suite() {
    Outcome o;
    for (int k = 0; k <= 28; ++k) o.require(check_ssfa(unit_algebra(level(k))).all(), lbl("unit", k));
    for (int k = 4; k <= 28; k += 2) o.require(check_ssfa(ade(k, Series::D)).all(), lbl("D", k));
    o.require(check_ssfa(ade(10, Series::E6)).all(), "E6");
    o.require(check_ssfa(ade(16, Series::E7)).all(), "E7");
    o.require(check_ssfa(ade(28, Series::E8)).all(), "E8");
    for (int k = 1; k <= 27; k += 2) {
        StructureProblem d{{0, k}, {{{k, k, 0}, 1}}, false};
        o.require(!solve_structure(level(k), d, "D").has_value(), lbl("D solve not empty", k));
    }
    o.detail << "unit k<=28, D k=4..28, E6, E7, E8; D solve empty at odd k<=27";
    return o;
}

Outcome invariant_suite() {
    Outcome o;
    for (int k = 0; k <= 28; ++k) o.require(z_matrix(unit_algebra(level(k))).z.is_identity(), lbl("Z(unit)", k));
    const oracle::IntMatrix d4 = {{1, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 1}};
    o.require(matches(z_matrix(ade(4, Series::D)).z, d4), "Z(D) at k=4");
    std::vector<std::pair<int, Series>> all;
    for (int k = 4; k <= 28; k += 2) all.push_back({k, Series::D});
    for (int k : {10, 16, 28}) all.push_back({k, exceptional_at(k)});
    for (auto [k, s] : all) {
        const Category& c = *level(k);
        Matrix z = z_matrix(ade(k, s)).z;
        const std::string name = series_name(s);
        o.require(z.is_nonnegative_integer(), lbl(name + " integrality", k));
        o.require(z(0, 0).is_one(), lbl(name + " Z00", k));
        o.require(commutator(z, c.smatrix()).is_zero(), lbl(name + " [Z,S]", k));
        o.require(commutator(z, c.tmatrix()).is_zero(), lbl(name + " [Z,T]", k));
        o.require(matches(z, s == Series::D ? oracle::d_series(k) : oracle::exceptional(k)), lbl(name + " character formula", k));
    }
    o.detail << "Z(unit)=I for k<=28, Z(D,4) block form, " << all.size() << " ADE invariants";
    return o;
}

Outcome genus_one_dims() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        auto r = decomposition_report(ade_family(level(4 * n)), 1, "D");
        const bool ok = r.dims.size() == 2 && r.dims[0].dim == n + 1 && r.dims[1].dim == 3 * n;
        o.require(ok, lbl("dims", 4 * n));
        o.detail << "k=" << 4 * n << ":(" << r.dims[0].dim << "," << r.dims[1].dim << ") ";
    }
    return o;
}

Outcome discrepancy_ledger() {
    Outcome o;
    auto inspect = [&](int k, const std::string& series) {
        auto r = decomposition_report(ade_family(level(k)), 1, series);
        long total = 0;
        for (const auto& w : r.witnesses) {
            const bool integral = w.trace.is_rational() && w.trace.rational().get_den() == 1;
            o.require(integral, lbl(series + " trace of " + w.name + " integral", k));
            o.require(integral && w.trace.rational() > 0, lbl(series + " trace of " + w.name + " positive", k));
        }
        for (const auto& d : r.dims) total += d.dim;
        o.require(total == k + 1, lbl(series + " traces sum", k));
        o.detail << "k=" << k << series << "[";
        bool first = true;
        for (const auto& d : r.dims) {
            o.detail << (first ? "" : " ") << d.name << "=" << d.dim;
            first = false;
            for (const auto& n : r.notes)
                if (n.name == d.name && n.stated != n.computed) o.detail << "(stated " << n.stated << ")";
        }
        o.detail << "] ";
        o.require(!r.notes.empty(), lbl(series + " stated-value comparison missing", k));
    };
    for (int k = 6; k <= 26; k += 4) inspect(k, "D");
    inspect(10, "E");
    return o;
}

Outcome commutant_relations() {
    Outcome o;
    int evaluated = 0, skipped = 0;
    auto run = [&](int k, int g) {
        for (const auto& c : verify_fusion_relations(ade_family(level(k)), g)) {
            if (!c.evaluated) {
                ++skipped;
                o.detail << "not evaluated: " << c.name << " at k=" << k << " g=" << g << "; ";
                continue;
            }
            ++evaluated;
            o.require(c.holds, c.name + " at k=" + std::to_string(k) + " g=" + std::to_string(g) + " (" + c.detail + ")");
        }
    };
    for (int k : {4, 6, 8, 10, 16, 28}) run(k, 1);
    for (int k : {4, 6, 10}) run(k, 2);
    o.detail << evaluated << " identities evaluated, " << skipped << " skipped";
    return o;
}

Outcome triangulation_independence() {
    Outcome o;
    const Algebra& d = ade(4, Series::D);
    Matrix p0 = p_matrix(d, 2, 0), p1 = p_matrix(d, 2, 1);
    o.require(p0 == p1, "P_2[D] differs between triangulations");
    o.require(p0 == p_matrix_serial(d, 2, 1), "serial kernel differs");
    o.detail << "P_2[D] at k=4 is " << p0.rows() << "x" << p0.cols();
    return o;
}

Outcome mapping_class_commutation() {
    Outcome o;
    int count = 0;
    for (int k = 0; k <= 28; ++k) {
        const Category& c = *level(k);
        std::vector<const Algebra*> list;
        Algebra unit = unit_algebra(level(k));
        list.push_back(&unit);
        if (series_available(k, Series::D)) list.push_back(&ade(k, Series::D));
        if (k == 10 || k == 16 || k == 28) list.push_back(&ade(k, exceptional_at(k)));
        for (const Algebra* a : list) {
            Matrix p = p_matrix(*a, 1);
            o.require(commutator(p, c.smatrix()).is_zero(), lbl(a->tag + " [P_1,S]", k));
            o.require(commutator(p, c.tmatrix()).is_zero(), lbl(a->tag + " [P_1,T]", k));
            ++count;
        }
    }
    for (int k = 0; k <= 10; ++k) {
        const Category& c = *level(k);
        std::vector<const Algebra*> list;
        if (series_available(k, Series::D)) list.push_back(&ade(k, Series::D));
        if (k == 10) list.push_back(&ade(k, Series::E6));
        for (const Algebra* a : list) {
            Matrix p = p_matrix(*a, 2);
            for (int e = 0; e < edge_count(2); ++e)
                o.require(commutator(p, dehn_twist_cut(c, 2, e)).is_zero(), lbl(a->tag + " twist " + std::to_string(e), k));
            ++count;
        }
    }
    o.detail << count << " commutant elements checked";
    return o;
}

Outcome rig_reproduction() {
    Outcome o;
    auto sum = [](std::initializer_list<std::pair<const std::string, int>> l) { return ClassSum(l); };
    for (int k : {4, 6, 10, 16, 28}) {
        auto t = rig_table(k);
        std::map<std::string, int> at;
        for (int i = 0; i < static_cast<int>(t.names.size()); ++i) at[t.names[i]] = i;
        auto cell = [&](const std::string& x, const std::string& y) { return t.products[at.at(x)][at.at(y)]; };
        for (const auto& x : t.names) o.require(cell("A", x) == sum({{x, 1}}), lbl("unit row", k));
        o.require(cell("D", "D") == (k % 4 == 0 ? sum({{"D", 2}}) : sum({{"A", 1}})), lbl("[D]x[D]", k));
        if (k == 10) {
            o.require(cell("D", "E") == sum({{"E", 1}}), lbl("[D]x[E]", k));
            o.require(cell("E", "E") == sum({{"E", 2}}), lbl("[E]x[E]", k));
        } else if (k == 16) {
            o.require(cell("D", "E") == sum({{"E", 2}}), lbl("[D]x[E]", k));
            o.require(cell("E", "E") == sum({{"D", 1}, {"E", 1}}), lbl("[E]x[E]", k));
        } else if (k == 28) {
            o.require(cell("D", "E") == sum({{"E", 2}}), lbl("[D]x[E]", k));
            o.require(cell("E", "E") == sum({{"E", 4}}), lbl("[E]x[E]", k));
        }
        for (std::size_t i = 0; i < t.names.size(); ++i)
            for (std::size_t j = 0; j < t.names.size(); ++j)
                if (t.methods[i][j] != "direct")
                    o.detail << "k=" << k << " [" << t.names[i] << "]x[" << t.names[j] << "] " << t.methods[i][j] << "; ";
    }
    o.detail << "levels 4, 6, 10, 16, 28";
    return o;
}

Outcome reducibility() {
    Outcome o;
    for (int k = 4; k <= 28; k += 2)
        for (int g : {1, 2}) o.require(reducibility_certificate(ade(k, Series::D), g).reducible, lbl("D g=" + std::to_string(g), k));
    for (int k : {10, 16, 28}) o.require(reducibility_certificate(ade(k, exceptional_at(k)), 1).reducible, lbl("E g=1", k));
    o.detail << "D at even k in [4,28] for g=1,2; E6, E7, E8 at g=1";
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double budget_s;  // 0: no limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "category identities and Verlinde consistency", 60, category_suite},
        {2, "algebra axioms and odd-level D solve", 60, algebra_suite},
        {3, "modular invariants", 0, invariant_suite},
        {4, "genus-one D dimensions (n+1, 3n)", 10, genus_one_dims},
        {5, "projector traces against the stated values", 0, discrepancy_ledger},
        {6, "commutant relations, products and sums", 600, commutant_relations},
        {7, "triangulation independence at g=2, k=4", 0, triangulation_independence},
        {8, "commutation with the mapping class group", 0, mapping_class_commutation},
        {9, "rig multiplication table", 0, rig_reproduction},
        {10, "reducibility certificates", 0, reducibility},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && secs > c.budget_s) o.fail("runtime above " + std::to_string(static_cast<int>(c.budget_s)) + " s");
        std::printf("%s  %2d  %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs, o.detail.str().c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
