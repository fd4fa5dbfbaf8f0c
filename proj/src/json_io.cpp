#include "hmp/json_io.hpp"

#include "hmp/errors.hpp"

namespace hmp {

namespace {
// Largest integer magnitude emitted as a JSON number (2^53, double-exact).
const Int kJsonNumberLimit = Int(1) << 53;
}

Json int_to_json(const Int& v) {
    if (cmp_abs(v, kJsonNumberLimit) < 0) return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        Int v;
        if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
            throw schema_error("malformed integer string: " + j.get<std::string>());
        return v;
    }
    throw schema_error("expected an integer (number or decimal string), got: " + j.dump());
}

Json rat_to_json(const Rat& r) {
    Json j;
    j["num"] = int_to_json(Int(r.get_num()));
    j["den"] = int_to_json(Int(r.get_den()));
    return j;
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw schema_error("matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw schema_error("matrix rows must be nonempty arrays");
    const std::size_t cols = j[0].size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw schema_error("matrix rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
    }
    return m;
}

Json poly_to_json(const IntPolynomial& p) {
    Json coeffs = Json::array();
    if (p.is_zero()) {
        coeffs.push_back(0);
        return coeffs;
    }
    for (const Int& c : p.coeffs()) coeffs.push_back(int_to_json(c));
    return coeffs;
}

IntPolynomial poly_from_json(const Json& j) {
    if (!j.is_array()) throw schema_error("polynomial must be an ascending coefficient array");
    std::vector<Int> c;
    c.reserve(j.size());
    for (const auto& v : j) c.push_back(int_from_json(v));
    return IntPolynomial(std::move(c));
}

}  // namespace hmp
