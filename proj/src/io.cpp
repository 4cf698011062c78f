#include "qrep/io.hpp"

#include <sstream>
#include <stdexcept>

namespace qrep {

namespace {

nlohmann::json int_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

mpz_class int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected an integer");
}

mpz_class integer_entry(const Scalar& s) {
    if (!s.is_rational() || s.rational().get_den() != 1) throw std::invalid_argument("matrix entry is not an integer");
    return s.rational().get_num();
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& q : s.coeffs()) coeffs.push_back({int_json(q.get_num()), int_json(q.get_den())});
    return {{"order", s.field()->order()}, {"coeffs", coeffs}};
}

nlohmann::json scalar_to_json_with_float(const Scalar& s) {
    nlohmann::json j = scalar_to_json(s);
    auto z = s.to_complex();
    j["float"] = {z.real(), z.imag()};
    return j;
}

Scalar scalar_from_json(const FieldPtr& f, const nlohmann::json& j) {
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("scalar must be {order, coeffs}");
    const int order = j["order"].get<int>();
    if (f->order() % order != 0) throw FieldMismatch("scalar order does not divide the field order");
    const auto& c = j["coeffs"];
    if (!c.is_array() || static_cast<int>(c.size()) > CyclotomicField::get(order)->degree())
        throw std::invalid_argument("scalar coefficient list too long");
    const long step = f->order() / order;
    Scalar out = Scalar::zero(f);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_array() || c[i].size() != 2) throw std::invalid_argument("coefficient must be [num, den]");
        mpq_class q(int_from_json(c[i][0]), int_from_json(c[i][1]));
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        if (q != 0) out += Scalar::root(f, static_cast<long>(i) * step).scaled(q);
    }
    return out;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json integer_matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_json(integer_entry(m(i, j))));
        rows.push_back(row);
    }
    return rows;
}

std::string integer_matrix_to_csv(const Matrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << integer_entry(m(i, j)).get_str();
        os << "\n";
    }
    return os.str();
}

nlohmann::json f_cache_to_json(const Category& cat) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, v] : cat.f_entries()) entries.push_back({key, scalar_to_json(v)});
    return {{"level", cat.level()}, {"entries", entries}};
}

std::size_t f_cache_from_json(const Category& cat, const nlohmann::json& j) {
    if (!j.is_object() || j.value("level", -1) != cat.level() || !j.contains("entries")) return 0;
    std::size_t n = 0;
    for (const auto& e : j["entries"]) {
        cat.seed_f(e.at(0).get<std::uint64_t>(), scalar_from_json(cat.field(), e.at(1)));
        ++n;
    }
    return n;
}

}  // namespace qrep
