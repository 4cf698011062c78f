// Command-line front end: category data, algebras, modular invariants, genus-g
// commutant elements and the rig of algebra classes.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifdef QREP_HAVE_OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "qrep/commutant.hpp"
#include "qrep/io.hpp"
#include "qrep/modular_invariant.hpp"
#include "qrep/recoupling.hpp"
#include "qrep/rig.hpp"

using namespace qrep;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Pretty, Json, Csv };

struct RunConfig {
    int level = -1;
    int genus = 1;
    std::string series;
    std::string file;
    std::string out;
    bool json = false;
    bool csv = false;
    int threads = 0;

    Format format() const { return csv ? Format::Csv : json ? Format::Json : Format::Pretty; }
};

// Categories opened in this run, saved back to the cache directory at exit.
std::vector<CategoryPtr> opened;

std::filesystem::path cache_file(int level) {
    const char* dir = std::getenv("QREP_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) / ("su2_level_" + std::to_string(level) + ".json");
}

CategoryPtr open_level(int level) {
    if (level < 0) throw UsageError("--level is required and must be nonnegative");
    auto cat = std::make_shared<const Category>(level);
    auto path = cache_file(level);
    if (!path.empty() && std::filesystem::exists(path)) {
        std::ifstream in(path);
        try {
            f_cache_from_json(*cat, json::parse(in));
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring unreadable cache " << path << ": " << e.what() << "\n";
        }
    }
    opened.push_back(cat);
    return cat;
}

void save_caches() {
    for (const auto& cat : opened) {
        auto path = cache_file(cat->level());
        if (path.empty()) continue;
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << f_cache_to_json(*cat).dump();
            if (!out) continue;
        }
        std::filesystem::rename(tmp, path, ec);
    }
}

json read_json_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open " + file);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(file + ": " + e.what());
    }
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(cfg.out);
    if (!out) throw UsageError("cannot write " + cfg.out);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string pretty(const Scalar& s) {
    std::ostringstream os;
    auto z = s.to_complex();
    os << s.to_string() << " (" << std::setprecision(10) << z.real();
    if (std::abs(z.imag()) > 1e-12) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    os << ")";
    return os.str();
}

std::string render_integer_matrix(const Matrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << std::setw(2) << m(i, j).to_string();
        os << '\n';
    }
    return os.str();
}

json checks_to_json(const std::vector<RelationCheck>& checks) {
    json a = json::array();
    for (const auto& c : checks)
        a.push_back({{"name", c.name}, {"holds", c.holds}, {"evaluated", c.evaluated}, {"detail", c.detail}});
    return a;
}

bool all_hold(const std::vector<RelationCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds || !c.evaluated; });
}

std::string render_checks(const std::vector<RelationCheck>& checks) {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (!c.evaluated ? "  skip  " : c.holds ? "  ok    " : "  FAIL  ") << c.name;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << '\n';
    }
    return os.str();
}

// "A" (unit), "D", "E" (the exceptional algebra at the level) or an explicit E6/E7/E8.
Algebra algebra_for(const CategoryPtr& cat, const std::string& name) {
    if (name == "A" || name == "unit") return unit_algebra(cat);
    if (name == "E") {
        for (Series s : {Series::E6, Series::E7, Series::E8})
            if (series_available(cat->level(), s)) return build_ade(cat, s);
        throw UsageError("no exceptional algebra at level " + std::to_string(cat->level()));
    }
    auto s = parse_series(name);
    if (!s) throw UsageError("unknown series '" + name + "' (expected A, D, E, E6, E7 or E8)");
    if (!series_available(cat->level(), *s))
        throw UsageError(series_name(*s) + " is not available at level " + std::to_string(cat->level()));
    return build_ade(cat, *s);
}

int cmd_category_info(const RunConfig& cfg) {
    auto cat = open_level(cfg.level);
    json j;
    j["level"] = cat->level();
    j["labels"] = cat->labels();
    json qd = json::array(), tw = json::array();
    for (int a : cat->labels()) {
        qd.push_back(scalar_to_json_with_float(cat->qdim(a)));
        tw.push_back(scalar_to_json_with_float(cat->twist(a)));
    }
    j["qdims"] = qd;
    j["twists"] = tw;
    j["smatrix"] = matrix_to_json(cat->smatrix());
    if (cfg.format() == Format::Json) {
        emit(cfg, j.dump(2));
        return kOk;
    }
    std::ostringstream os;
    os << "su(2) level " << cat->level() << ", field Q(zeta_" << cat->field()->order() << ")\n";
    for (int a : cat->labels())
        os << "  " << std::setw(2) << a << "  d = " << pretty(cat->qdim(a)) << "  theta = " << pretty(cat->twist(a)) << '\n';
    os << "  global dimension " << pretty(cat->global_dim()) << '\n';
    emit(cfg, os.str());
    return kOk;
}

int cmd_algebra_build(const RunConfig& cfg) {
    auto cat = open_level(cfg.level);
    Algebra a = algebra_for(cat, cfg.series);
    if (cfg.format() == Format::Json || !cfg.out.empty()) {
        emit(cfg, algebra_to_json(a).dump(2));
        return kOk;
    }
    std::ostringstream os;
    os << a.tag << " at level " << cat->level() << ", object";
    for (int l : a.label) os << ' ' << l;
    os << ", dim " << pretty(a.dim()) << '\n';
    for (const auto& [k, v] : a.m)
        os << "  m(" << a.label[k[0]] << "," << a.label[k[1]] << "->" << a.label[k[2]] << ") = " << pretty(v) << '\n';
    emit(cfg, os.str());
    return kOk;
}

int cmd_algebra_check(const RunConfig& cfg) {
    if (cfg.file.empty()) throw UsageError("--file is required");
    Algebra a;
    try {
        a = algebra_from_json(read_json_file(cfg.file));
    } catch (const InvalidAlgebra& e) {
        emit(cfg, json{{"valid", false}, {"error", e.what()}}.dump(2));
        return kCheckFailed;
    }
    opened.push_back(a.cat);
    auto r = check_ssfa(a);
    json j{{"level", a.cat->level()},   {"object", a.label},          {"tag", a.tag},
           {"associative", r.associative}, {"unital", r.unital},       {"nondegenerate", r.nondegenerate},
           {"symmetric", r.symmetric},     {"special", r.special},     {"frobenius", r.frobenius},
           {"valid", r.all()}};
    if (cfg.format() == Format::Json) {
        emit(cfg, j.dump(2));
    } else {
        std::ostringstream os;
        for (const char* key : {"associative", "unital", "nondegenerate", "symmetric", "special", "frobenius"})
            os << (j[key].get<bool>() ? "  ok    " : "  FAIL  ") << key << '\n';
        emit(cfg, os.str());
    }
    return r.all() ? kOk : kCheckFailed;
}

int cmd_zmatrix(const RunConfig& cfg) {
    auto cat = open_level(cfg.level);
    Algebra a = algebra_for(cat, cfg.series);
    auto inv = z_matrix(a);
    switch (cfg.format()) {
        case Format::Csv: emit(cfg, integer_matrix_to_csv(inv.z)); break;
        case Format::Json:
            emit(cfg, json{{"level", inv.level}, {"algebra", inv.algebra_tag}, {"z", integer_matrix_to_json(inv.z)},
                           {"trivial", is_trivial(inv.z)}}
                          .dump(2));
            break;
        case Format::Pretty: emit(cfg, render_integer_matrix(inv.z)); break;
    }
    return kOk;
}

int cmd_basis_list(const RunConfig& cfg) {
    if (cfg.genus < 1) throw UsageError("--genus must be at least 1");
    auto cat = open_level(cfg.level);
    auto basis = enumerate_basis(*cat, cfg.genus);
    if (cfg.format() == Format::Json) {
        emit(cfg, json{{"genus", cfg.genus},
                       {"level", cfg.level},
                       {"count", basis.size()},
                       {"verlinde", cat->verlinde_dim(cfg.genus)},
                       {"basis", basis}}
                      .dump(2));
        return kOk;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        os << std::setw(6) << i << "  (";
        for (std::size_t p = 0; p < basis[i].size(); ++p) os << (p ? "," : "") << basis[i][p];
        os << ")\n";
    }
    os << basis.size() << " trees\n";
    emit(cfg, os.str());
    return kOk;
}

int cmd_decompose(const RunConfig& cfg) {
    if (cfg.genus < 1) throw UsageError("--genus must be at least 1");
    const std::string series = cfg.series.empty() ? "D" : cfg.series;
    if (series != "D" && series != "E") throw UsageError("--series must be D or E");
    auto cat = open_level(cfg.level);
    if (cfg.level % 2 || cfg.level < 4) throw UsageError("decompose needs an even level of at least 4");
    auto fam = ade_family(cat);
    if (series == "E" && !fam.e) throw UsageError("no exceptional algebra at level " + std::to_string(cfg.level));
    auto r = decomposition_report(fam, cfg.genus, series);
    json dims = json::array(), names = json::array(), traces = json::object(), notes = json::array();
    for (const auto& d : r.dims) {
        dims.push_back(d.dim);
        names.push_back(d.name);
    }
    for (const auto& w : r.witnesses) traces[w.name] = scalar_to_json(w.trace);
    for (const auto& n : r.notes) notes.push_back({{"summand", n.name}, {"computed", n.computed}, {"stated", n.stated},
                                                   {"matches", n.computed == n.stated}});
    const bool ok = all_hold(r.checks);
    if (cfg.format() == Format::Json) {
        emit(cfg, json{{"genus", r.genus},
                       {"level", r.level},
                       {"series", r.series},
                       {"summands", names},
                       {"dims", dims},
                       {"traces", traces},
                       {"verlinde", r.verlinde},
                       {"checks", checks_to_json(r.checks)},
                       {"notes", notes}}
                      .dump(2));
    } else {
        std::ostringstream os;
        os << "genus " << r.genus << ", level " << r.level << ", series " << r.series << ", Verlinde dimension "
           << r.verlinde << '\n';
        for (const auto& d : r.dims) os << "  " << std::setw(3) << d.name << "  " << d.dim << '\n';
        os << render_checks(r.checks);
        for (const auto& n : r.notes)
            if (n.computed != n.stated)
                os << "  note: " << n.name << " computed " << n.computed << ", stated value " << n.stated << '\n';
        emit(cfg, os.str());
    }
    return ok ? kOk : kCheckFailed;
}

std::vector<RelationCheck> commutation_checks(const CategoryPtr& cat, const std::string& name, const Algebra& a,
                                              int genus) {
    std::vector<RelationCheck> out;
    Matrix p = p_matrix(a, genus);
    if (genus == 1) {
        out.push_back({"[P[" + name + "], S] = 0", commutator(p, rep_genus1(*cat, Generator::S)).is_zero(), ""});
        out.push_back({"[P[" + name + "], T] = 0", commutator(p, rep_genus1(*cat, Generator::T)).is_zero(), ""});
        return out;
    }
    for (int e = 0; e < edge_count(genus); ++e)
        out.push_back({"[P[" + name + "], twist on edge " + std::to_string(e) + "] = 0",
                       commutator(p, dehn_twist_cut(*cat, genus, e)).is_zero(), ""});
    out.push_back({"P[" + name + "] independent of the triangulation", p == p_matrix(a, genus, 1), ""});
    return out;
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.genus < 1) throw UsageError("--genus must be at least 1");
    auto cat = open_level(cfg.level);
    auto fam = ade_family(cat);
    auto checks = verify_fusion_relations(fam, cfg.genus);
    if (fam.d)
        for (auto& c : commutation_checks(cat, "D", *fam.d, cfg.genus)) checks.push_back(std::move(c));
    if (fam.e)
        for (auto& c : commutation_checks(cat, "E", *fam.e, cfg.genus)) checks.push_back(std::move(c));
    const bool ok = all_hold(checks);
    if (cfg.format() == Format::Json)
        emit(cfg, json{{"level", cfg.level}, {"genus", cfg.genus}, {"checks", checks_to_json(checks)}, {"all", ok}}.dump(2));
    else
        emit(cfg, render_checks(checks));
    return ok ? kOk : kCheckFailed;
}

int cmd_rig_table(const RunConfig& cfg) {
    open_level(cfg.level);
    auto t = rig_table(cfg.level);
    const int n = static_cast<int>(t.names.size());
    json table = json::object();
    std::ostringstream os;
    os << std::setw(5) << "x";
    for (const auto& name : t.names) os << std::setw(14) << "[" + name + "]";
    os << '\n';
    for (int i = 0; i < n; ++i) {
        os << std::setw(5) << "[" + t.names[i] + "]";
        for (int j = 0; j < n; ++j) {
            os << std::setw(14) << class_sum_to_string(t.products[i][j]);
            table[t.names[i] + "x" + t.names[j]] = {{"sum", t.products[i][j]},
                                                    {"rendered", class_sum_to_string(t.products[i][j])},
                                                    {"method", t.methods[i][j]}};
        }
        os << '\n';
    }
    if (cfg.format() == Format::Json)
        emit(cfg, json{{"level", t.level}, {"generators", t.names}, {"products", table}, {"rendered", os.str()}}.dump(2));
    else
        emit(cfg, os.str());
    return kOk;
}

int cmd_net_eval(const RunConfig& cfg) {
    if (cfg.file.empty()) throw UsageError("--file is required");
    json net = read_json_file(cfg.file);
    if (!net.is_object() || !net.contains("level") || !net.contains("steps"))
        throw UsageError("network file needs level and steps");
    auto cat = open_level(net["level"].get<int>());
    Scalar v = evaluate_closed_net(*cat, net["steps"]);
    if (cfg.format() == Format::Json)
        emit(cfg, json{{"level", cat->level()}, {"value", scalar_to_json_with_float(v)}}.dump(2));
    else
        emit(cfg, pretty(v));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact su(2)_k modular data, Frobenius algebras and genus-g commutant elements"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--threads", cfg.threads, "Worker threads for the parallel kernels (0: runtime default)")
        ->check(CLI::NonNegativeNumber);

    auto level_opt = [&](CLI::App* sc) { sc->add_option("--level,-k", cfg.level, "Level k")->required()->check(CLI::NonNegativeNumber); };
    auto out_opts = [&](CLI::App* sc, bool csv) {
        sc->add_flag("--json", cfg.json, "Emit JSON");
        if (csv) sc->add_flag("--csv", cfg.csv, "Emit CSV");
        sc->add_option("--out,-o", cfg.out, "Write to a file instead of standard output");
    };

    std::function<int(const RunConfig&)> action;
    auto bind = [&](CLI::App* sc, int (*fn)(const RunConfig&)) { sc->callback([&action, fn] { action = fn; }); };

    auto* category = app.add_subcommand("category", "Category data");
    category->require_subcommand(1);
    auto* info = category->add_subcommand("info", "Labels, dimensions, twists and S-matrix");
    level_opt(info);
    out_opts(info, false);
    bind(info, cmd_category_info);

    auto* algebra = app.add_subcommand("algebra", "Frobenius algebras");
    algebra->require_subcommand(1);
    auto* build = algebra->add_subcommand("build", "Solve the structure constants of an ADE algebra");
    level_opt(build);
    build->add_option("--series", cfg.series, "A, D, E6, E7 or E8")->required();
    out_opts(build, false);
    bind(build, cmd_algebra_build);
    auto* check = algebra->add_subcommand("check", "Check the axioms of an algebra file");
    check->add_option("--file", cfg.file, "Algebra JSON")->required();
    out_opts(check, false);
    bind(check, cmd_algebra_check);

    auto* zm = app.add_subcommand("zmatrix", "Modular invariant of an ADE algebra");
    level_opt(zm);
    zm->add_option("--series", cfg.series, "A, D, E6, E7 or E8")->required();
    out_opts(zm, true);
    bind(zm, cmd_zmatrix);

    auto* basis = app.add_subcommand("basis", "Genus-g block space bases");
    basis->require_subcommand(1);
    auto* list = basis->add_subcommand("list", "Admissible labelings of the standard tree");
    level_opt(list);
    list->add_option("--genus,-g", cfg.genus, "Genus")->required();
    out_opts(list, false);
    bind(list, cmd_basis_list);

    auto* dec = app.add_subcommand("decompose", "Split the genus-g space with the commutant idempotents");
    level_opt(dec);
    dec->add_option("--genus,-g", cfg.genus, "Genus")->required();
    dec->add_option("--series", cfg.series, "D or E");
    out_opts(dec, false);
    bind(dec, cmd_decompose);

    auto* ver = app.add_subcommand("verify", "Relation suite for the commutant elements");
    level_opt(ver);
    ver->add_option("--genus,-g", cfg.genus, "Genus")->required();
    out_opts(ver, false);
    bind(ver, cmd_verify);

    auto* rig = app.add_subcommand("rig", "Rig of algebra classes");
    rig->require_subcommand(1);
    auto* table = rig->add_subcommand("table", "Multiplication table of the generator classes");
    level_opt(table);
    out_opts(table, false);
    bind(table, cmd_rig_table);

    auto* net = app.add_subcommand("net", "Closed networks");
    net->require_subcommand(1);
    auto* eval = net->add_subcommand("eval", "Evaluate a closed network file");
    eval->add_option("--file", cfg.file, "Network JSON")->required();
    out_opts(eval, false);
    bind(eval, cmd_net_eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }
    if (cfg.json && cfg.csv) {
        std::cerr << "error: --json and --csv are exclusive\n";
        return kUsage;
    }
#ifdef QREP_HAVE_OPENMP
    if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
    int rc = kOk;
    try {
        rc = action(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedAlgebra& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidAlgebra& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    save_caches();
    return rc;
}
