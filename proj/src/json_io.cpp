#include "esymm/json_io.hpp"

#include <cstdint>
#include <sstream>

#include "esymm/errors.hpp"

namespace esymm {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

} // namespace

Rational rational_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Rational::from_string(j.get<std::string>());
        } catch (const ParseError& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected a rational as \"p/q\" string or integer");
}

json rational_to_json(const Rational& r) { return r.str(); }

Mat mat_from_json(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
    std::size_t rows = j.size();
    if (!j[0].is_array()) fail(path + "[0]", "expected an array");
    std::size_t cols = j[0].size();
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            fail(path + "[" + std::to_string(i) + "]", "ragged matrix row");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = rational_from_json(j[i][k], path + "[" + std::to_string(i) + "][" +
                                                         std::to_string(k) + "]");
    }
    return m;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Vec vec_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v[i] = rational_from_json(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_to_json(x));
    return out;
}

MultiPoly poly_from_json(const json& j, std::size_t num_vars, const std::string& path) {
    if (!j.is_array()) fail(path, "expected a list of terms");
    MultiPoly p(num_vars);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const json& term = j[t];
        std::string tp = path + "[" + std::to_string(t) + "]";
        if (!term.is_object() || !term.contains("exps") || !term.contains("coeff"))
            fail(tp, "term needs \"exps\" and \"coeff\"");
        const json& ex = term["exps"];
        if (!ex.is_array() || ex.size() != num_vars)
            fail(tp + ".exps", "expected " + std::to_string(num_vars) + " exponents");
        Monomial m{std::vector<std::uint32_t>(num_vars, 0), 0};
        for (std::size_t i = 0; i < num_vars; ++i) {
            if (!ex[i].is_number_unsigned() && !ex[i].is_number_integer())
                fail(tp + ".exps", "exponents must be nonnegative integers");
            auto e = ex[i].get<std::int64_t>();
            if (e < 0) fail(tp + ".exps", "exponents must be nonnegative");
            m.exps[i] = static_cast<std::uint32_t>(e);
        }
        if (term.contains("nu")) {
            auto nu = term["nu"].get<std::int64_t>();
            if (nu < 0) fail(tp + ".nu", "nu degree must be nonnegative");
            m.nu = static_cast<std::uint32_t>(nu);
        }
        p.add_term(m, rational_from_json(term["coeff"], tp + ".coeff"));
    }
    return p;
}

json poly_to_json(const MultiPoly& p) {
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json term;
        term["exps"] = m.exps;
        term["nu"] = m.nu;
        term["coeff"] = rational_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

SympSpace space_from_json(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("n") || !j.contains("p"))
        fail(path, "space needs integer fields \"n\" and \"p\"");
    auto n = j["n"].get<std::int64_t>();
    auto p = j["p"].get<std::int64_t>();
    if (n < 1 || p < 0) fail(path, "need n >= 1 and p >= 0");
    Mat omega0 = j.contains("omega0") ? mat_from_json(j["omega0"], path + ".omega0")
                                      : standard_skew(static_cast<std::size_t>(n));
    Mat omegaN0 = j.contains("omegaN0") ? mat_from_json(j["omegaN0"], path + ".omegaN0")
                                        : standard_skew(static_cast<std::size_t>(p));
    try {
        return SympSpace(static_cast<std::size_t>(n), static_cast<std::size_t>(p),
                         std::move(omega0), std::move(omegaN0));
    } catch (const ValidationError& e) {
        fail(path, e.what());
    }
}

json space_to_json(const SympSpace& s) {
    json j;
    j["n"] = s.n();
    j["p"] = s.p();
    j["omega0"] = mat_to_json(s.omega0());
    j["omegaN0"] = mat_to_json(s.omegaN0());
    return j;
}

ShapeFamily family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("C"))
        throw ParseError("family needs \"space\" and \"C\"");
    SympSpace space = space_from_json(j["space"], "space");
    if (!j["C"].is_array()) throw ParseError("C: expected a list of matrices");
    std::vector<Mat> c_ops;
    for (std::size_t i = 0; i < j["C"].size(); ++i)
        c_ops.push_back(mat_from_json(j["C"][i], "C[" + std::to_string(i) + "]"));

    std::optional<BStruct> b;
    if (j.contains("B_struct")) {
        const json& bj = j["B_struct"];
        std::size_t m = space.normal_dim();
        if (!bj.is_array() || bj.size() != m)
            throw ParseError("B_struct: expected a 3-index array B[k][i][j] with " +
                             std::to_string(m) + " slices");
        BStruct bs;
        bs.ops.assign(m, Mat(m, m));
        for (std::size_t k = 0; k < m; ++k) {
            Mat slice = mat_from_json(bj[k], "B_struct[" + std::to_string(k) + "]");
            if (slice.rows() != m || slice.cols() != m)
                throw ParseError("B_struct[" + std::to_string(k) + "]: wrong size");
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t jj = 0; jj < m; ++jj) bs.ops[i].at(k, jj) = slice.at(i, jj);
        }
        b = std::move(bs);
    }
    if (j.contains("B_ops")) {
        // normal operators B_i with B_i f_j = sum_k B^k_ij f_k; the matrix of
        // B_i in frame coordinates is exactly the i-th structure slice
        const json& bj = j["B_ops"];
        std::size_t m = space.normal_dim();
        if (!bj.is_array() || bj.size() != m)
            throw ParseError("B_ops: expected " + std::to_string(m) + " matrices");
        BStruct bs;
        for (std::size_t i = 0; i < m; ++i) {
            Mat op = mat_from_json(bj[i], "B_ops[" + std::to_string(i) + "]");
            if (op.rows() != m || op.cols() != m)
                throw ParseError("B_ops[" + std::to_string(i) + "]: wrong size");
            bs.ops.push_back(std::move(op));
        }
        if (b) {
            for (std::size_t i = 0; i < m; ++i)
                if (!(b->ops[i] == bs.ops[i]))
                    throw ParseError("B_ops and B_struct disagree at operator " +
                                     std::to_string(i + 1));
        } else {
            b = std::move(bs);
        }
    }
    Mat frame;
    const json& a_holder = j.contains("a_basis") ? j : j["space"];
    if (a_holder.contains("a_basis")) {
        const json& aj = a_holder["a_basis"];
        std::size_t m = space.normal_dim();
        if (!aj.is_array() || aj.size() != m)
            throw ParseError("a_basis: expected " + std::to_string(m) + " vectors");
        frame = Mat(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            Vec a = vec_from_json(aj[i], "a_basis[" + std::to_string(i) + "]");
            if (a.size() == space.dim()) {
                if (!vec_is_zero(space.tangent_part(a)))
                    throw ParseError("a_basis[" + std::to_string(i) +
                                     "]: frame vector must lie in the normal block");
                a = space.normal_part(a);
            }
            if (a.size() != m)
                throw ParseError("a_basis[" + std::to_string(i) + "]: wrong length");
            frame.set_col(i, a);
        }
    }
    try {
        return ShapeFamily(std::move(space), std::move(c_ops), std::move(b), std::move(frame));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("family: ") + e.what());
    }
}

json family_to_json(const ShapeFamily& f) {
    json j;
    j["space"] = space_to_json(f.space());
    j["C"] = json::array();
    for (const auto& c : f.C()) j["C"].push_back(mat_to_json(c));
    if (f.has_b_struct()) {
        std::size_t m = f.space().normal_dim();
        json b = json::array();
        for (std::size_t k = 0; k < m; ++k) {
            json slice = json::array();
            for (std::size_t i = 0; i < m; ++i) {
                json row = json::array();
                for (std::size_t jj = 0; jj < m; ++jj)
                    row.push_back(rational_to_json(f.b_struct()->coeff(k, i, jj)));
                slice.push_back(std::move(row));
            }
            b.push_back(std::move(slice));
        }
        j["B_struct"] = std::move(b);
    }
    j["a_basis"] = json::array();
    for (std::size_t i = 0; i < f.space().normal_dim(); ++i)
        j["a_basis"].push_back(vec_to_json(f.frame().col(i)));
    return j;
}

SurfaceSpec surface_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("generators"))
        throw ParseError("surface needs \"space\" and \"generators\"");
    SympSpace space = space_from_json(j["space"], "space");
    const json& gj = j["generators"];
    if (!gj.is_array()) throw ParseError("generators: expected a list");
    std::vector<AffineSympElement> gens;
    for (std::size_t i = 0; i < gj.size(); ++i) {
        std::string path = "generators[" + std::to_string(i) + "]";
        if (!gj[i].is_object() || !gj[i].contains("A") || !gj[i].contains("a"))
            throw ParseError(path + ": needs \"A\" and \"a\"");
        gens.push_back(AffineSympElement{mat_from_json(gj[i]["A"], path + ".A"),
                                         vec_from_json(gj[i]["a"], path + ".a")});
    }
    try {
        return SurfaceSpec::build(std::move(space), std::move(gens));
    } catch (const ValidationError& e) {
        throw ParseError(std::string("surface: ") + e.what());
    }
}

json surface_to_json(const SurfaceSpec& s) {
    json j;
    j["space"] = space_to_json(s.space());
    j["generators"] = json::array();
    for (const auto& g : s.generators())
        j["generators"].push_back(json{{"A", mat_to_json(g.A)}, {"a", vec_to_json(g.a)}});
    return j;
}

json orbit_point_to_json(const Vec& x_tilde, const Vec& u_tilde) {
    return json{{"x", vec_to_json(x_tilde)}, {"u", vec_to_json(u_tilde)}};
}

std::string content_digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << h;
    return os.str();
}

} // namespace esymm
