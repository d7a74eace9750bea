#include "esymm/reports.hpp"

#include <chrono>
#include <sstream>

#include "esymm/errors.hpp"
#include "esymm/moyal.hpp"
#include "esymm/orbit.hpp"
#include "esymm/rng.hpp"

namespace esymm {

namespace {

class ReportBuilder {
public:
    ReportBuilder(std::string command, const std::string& input_text, std::uint64_t seed)
        : start_(std::chrono::steady_clock::now()) {
        report_["command"] = std::move(command);
        report_["input_digest"] = content_digest(input_text);
        report_["seed"] = seed;
        report_["checks"] = json::array();
    }

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        json c;
        c["name"] = name;
        c["pass"] = pass;
        if (!detail.empty()) c["detail"] = detail;
        report_["checks"].push_back(std::move(c));
        all_ = all_ && pass;
    }

    /// Runs fn and records an exception as a failed check.
    template <typename Fn>
    void guarded(const std::string& name, Fn&& fn) {
        try {
            fn(*this);
        } catch (const std::exception& e) {
            add(name, false, e.what());
        }
    }

    json& extra() { return report_; }

    json finish() {
        report_["passed"] = all_;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        report_["wall_time_ms"] = ms;
        return report_;
    }

private:
    json report_;
    bool all_ = true;
    std::chrono::steady_clock::time_point start_;
};

MultiPoly random_low_degree_poly(Rng& rng, std::size_t nvars, std::uint32_t max_deg, int terms) {
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m{std::vector<std::uint32_t>(nvars, 0), 0};
        std::uint32_t budget = max_deg;
        for (std::size_t i = 0; i < nvars && budget; ++i) {
            auto e = static_cast<std::uint32_t>(rng.below(budget + 1));
            m.exps[i] = e;
            budget -= e;
        }
        p.add_term(m, Rational(rng.int_in(-3, 3), rng.int_in(1, 2)));
    }
    return p;
}

std::string json_b_tensor(const BStruct& b, std::size_t m) {
    json out = json::array();
    for (std::size_t k = 0; k < m; ++k) {
        json slice = json::array();
        for (std::size_t i = 0; i < m; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m; ++j) row.push_back(b.coeff(k, i, j).str());
            slice.push_back(std::move(row));
        }
        out.push_back(std::move(slice));
    }
    return out.dump();
}

} // namespace

json run_check_lambda(const std::string& input_text, std::uint64_t seed) {
    ReportBuilder rb("check-lambda", input_text, seed);
    json parsed = json::parse(input_text);
    ShapeFamily family = family_from_json(parsed);
    LambdaMap lm = LambdaMap::build(family);
    rb.add("build", true,
           "n=" + std::to_string(family.n()) + " p=" + std::to_string(family.p()) +
               (family.has_b_struct() ? " with structure constants" : ""));

    ConditionReport c1 = check_condition_1(lm);
    rb.add("condition_1", c1.pass, c1.detail);
    ConditionReport c2 = check_condition_2(lm);
    rb.add("condition_2", c2.pass, c2.detail);
    rb.guarded("condition_3", [&](ReportBuilder& b) {
        ConditionReport c3 = check_condition_3(lm);
        b.add("condition_3", c3.pass, c3.detail);
    });

    bool flat = false;
    rb.guarded("curvature_dual_formula", [&](ReportBuilder& b) {
        CurvatureTensor r = curvature_at_base(lm);
        flat = r.is_zero();
        b.add("curvature_dual_formula", true, flat ? "curvature vanishes" : "curvature nonzero");
        b.add("curvature_phi_consistency", curvature_via_phi(lm) == r, "");
        // -w0(psi ., .) has matrix w0 psi for sp-valued psi
        Mat ric = ricci(lm.space(), r);
        b.add("ricci_bracket_identity", ric == lm.space().omega0() * psi_of_curvature_element(lm),
              "");
    });
    rb.guarded("flat_iff_isotropic", [&](ReportBuilder& b) {
        b.add("flat_iff_isotropic", check_flat_iff_isotropic(lm), flat ? "flat" : "curved");
    });

    rb.guarded("nilpotency", [&](ReportBuilder& b) {
        Rng rng(seed);
        int max_degree = 0;
        std::size_t tn = lm.space().tangent_dim();
        for (std::size_t a = 0; a < tn; ++a) {
            Vec x = zero_vec(tn);
            x[a] = Rational(1);
            max_degree = std::max(max_degree, nilpotency_degree(lm, x));
        }
        for (int k = 0; k < 10; ++k) {
            Vec x(tn);
            for (auto& v : x) v = rng.rational(2, 2);
            max_degree = std::max(max_degree, nilpotency_degree(lm, x));
        }
        b.add("nilpotency", true, "max degree " + std::to_string(max_degree));
    });

    rb.guarded("group_algebra_closure", [&](ReportBuilder& b) {
        GroupAlgebra ga = lambda_group_algebra(lm);
        std::ostringstream os;
        os << "spanning " << ga.spanning.size() << " elements, nilpotency class "
           << ga.nilpotency_class;
        b.add("group_algebra_closure", ga.closed, os.str());
    });

    if (family.has_b_struct())
        rb.extra()["b_struct"] = json::parse(json_b_tensor(*family.b_struct(), family.space().normal_dim()));
    return rb.finish();
}

json run_surface(const std::string& input_text, std::size_t verify_pairs, std::uint64_t seed) {
    ReportBuilder rb("surface", input_text, seed);
    json parsed = json::parse(input_text);
    SurfaceSpec surf = surface_from_json(parsed);
    rb.add("build", true, "gram rank " + std::to_string(surf.gram().rank()));
    rb.extra()["b_struct"] =
        json::parse(json_b_tensor(surf.b_struct(), surf.space().normal_dim()));

    rb.add("membership_origin", surf.membership(zero_vec(surf.space().dim())));

    SurfaceSpec::ProductReport pr = surf.verify_product_identities();
    rb.add("anticommutation", pr.anticommute, pr.detail);
    rb.add("triple_products_zero", pr.triples_zero, pr.detail);
    rb.guarded("bullet_algebra", [&](ReportBuilder& b) {
        surf.bullet_product();
        b.add("bullet_algebra", true, pr.pairs_zero ? "all pairwise products vanish" : "");
    });

    rb.guarded("extrinsic_symmetry", [&](ReportBuilder& b) {
        Rng rng(seed);
        std::size_t pool = std::min<std::size_t>(2 * verify_pairs + 2, 60);
        auto points = surf.sample_points(pool, rng);
        for (const auto& z : points) (void)surf.tangent_normal_split(z); // gram constancy
        b.add("gram_constancy", true, std::to_string(points.size()) + " points");
        std::size_t ok = 0;
        for (std::size_t k = 0; k < verify_pairs; ++k) {
            const Vec& x = points[rng.below(points.size())];
            const Vec& y = points[rng.below(points.size())];
            if (surf.verify_extrinsic_symmetry(x, y)) ++ok;
        }
        b.add("extrinsic_symmetry", ok == verify_pairs,
              std::to_string(ok) + "/" + std::to_string(verify_pairs) + " pairs");
    });
    return rb.finish();
}

json run_orbit(const std::string& input_text, std::size_t sample_count, std::uint64_t seed) {
    ReportBuilder rb("orbit", input_text, seed);
    json parsed = json::parse(input_text);
    json family_json = parsed.contains("family") ? parsed["family"] : parsed;
    ShapeFamily family = family_from_json(family_json);
    LambdaMap lm = LambdaMap::build(family);
    rb.add("build", true);

    std::vector<std::pair<Vec, Rational>> samples;
    if (parsed.contains("samples")) {
        const json& sj = parsed["samples"];
        if (!sj.is_array()) throw ParseError("samples: expected a list");
        for (std::size_t k = 0; k < sj.size(); ++k) {
            std::string path = "samples[" + std::to_string(k) + "]";
            if (!sj[k].contains("x") || !sj[k].contains("t"))
                throw ParseError(path + ": needs \"x\" and \"t\"");
            samples.emplace_back(vec_from_json(sj[k]["x"], path + ".x"),
                                 rational_from_json(sj[k]["t"], path + ".t"));
        }
    } else {
        Rng rng(seed);
        for (std::size_t k = 0; k < sample_count; ++k) {
            Vec x(lm.space().tangent_dim());
            for (auto& v : x) v = rng.rational(2, 2);
            samples.emplace_back(std::move(x), rng.rational(2, 3));
        }
    }

    json points = json::array();
    rb.guarded("orbit_route_agreement", [&](ReportBuilder& b) {
        int max_degree = 1;
        for (const auto& [x, t] : samples) {
            OrbitPoint op = orbit_point(lm, x, t);
            max_degree = std::max(max_degree, nilpotency_degree(lm, x));
            json entry = orbit_point_to_json(op.x_tilde, op.u_tilde);
            entry["t"] = t.str();
            points.push_back(std::move(entry));
        }
        b.add("orbit_route_agreement", true,
              "closed form = exponential route on " + std::to_string(samples.size()) + " samples");
        b.add("orbit_surface_membership", true, "surface equations exact on all samples");
        b.add("nilpotency_bound", max_degree <= 5, "max degree " + std::to_string(max_degree));
    });
    rb.extra()["orbit_points"] = points;

    rb.guarded("group_law", [&](ReportBuilder& b) {
        Rng rng(seed ^ 0x5bd1e995ULL);
        bool ok = true;
        for (int k = 0; k < 5 && ok; ++k) {
            Vec x(lm.space().tangent_dim());
            for (auto& v : x) v = rng.rational(2, 2);
            Rational s = rng.rational(2, 3), t = rng.rational(2, 3);
            ok = transvection(lm, x, t).after(transvection(lm, x, s)) == transvection(lm, x, t + s);
        }
        b.add("group_law", ok);
    });

    rb.guarded("flat_graph", [&](ReportBuilder& b) {
        if (!is_flat(lm)) {
            b.add("flat_graph", true, "family not flat; graph form not applicable");
            return;
        }
        auto graph = flat_graph_form(lm);
        bool ok = true;
        for (const auto& [x, t] : samples) {
            OrbitPoint op = orbit_point(lm, x, t);
            for (std::size_t k = 0; k < graph.size() && ok; ++k)
                ok = graph[k].eval(op.x_tilde) == op.u_tilde[k];
        }
        b.add("flat_graph", ok, "orbit points satisfy the quadratic graph");
    });
    return rb.finish();
}

json run_classify_codim2(std::size_t n, std::size_t count, std::uint64_t seed,
                         const std::string& mode) {
    std::ostringstream key;
    key << "classify-codim2 n=" << n << " count=" << count << " mode=" << mode;
    ReportBuilder rb("classify-codim2", key.str(), seed);
    ScalarMode m = mode == "float" ? ScalarMode::float64 : ScalarMode::exact;
    auto instances = sample_solutions(n, count, seed, m);
    rb.add("sampler", true, std::to_string(instances.size()) + " solutions");

    std::size_t flat = 0, products = 0, violations = 0, lemma_failures = 0;
    std::size_t condition3_checked = 0, condition3_mismatch = 0;
    for (std::size_t k = 0; k < instances.size(); ++k) {
        Codim2Verdict v = classify(instances[k]);
        if (v == Codim2Verdict::flat) ++flat;
        else if (v == Codim2Verdict::products_zero) ++products;
        else ++violations;
        if (!verify_proof_lemmas(instances[k], seed).all()) ++lemma_failures;
        if (k < 50) {
            ++condition3_checked;
            bool via_p1 = check_p1_equations(instances[k]);
            bool via_general =
                check_condition_3(LambdaMap::build(family_from_instance(instances[k]))).pass;
            if (via_p1 != via_general) ++condition3_mismatch;
        }
    }
    json histogram;
    histogram["flat"] = flat;
    histogram["products_zero"] = products;
    histogram["violation"] = violations;
    rb.extra()["verdict_histogram"] = histogram;
    rb.extra()["note"] =
        "the dichotomy is verified on the sampled solution set only; the sampler cannot certify "
        "universality";
    rb.add("dichotomy_no_violations", violations == 0,
           "flat=" + std::to_string(flat) + " products_zero=" + std::to_string(products) +
               " violation=" + std::to_string(violations));
    rb.add("proof_lemmas", lemma_failures == 0,
           std::to_string(instances.size() - lemma_failures) + "/" +
               std::to_string(instances.size()) + " pass");
    rb.add("p1_matches_condition_3", condition3_mismatch == 0,
           std::to_string(condition3_checked) + " instances cross-checked");
    return rb.finish();
}

json run_star(const std::string& input_text, bool on_sigma, const std::vector<std::string>& checks,
              std::uint64_t seed) {
    ReportBuilder rb("star", input_text, seed);
    json parsed = json::parse(input_text);
    if (!parsed.contains("surface")) throw ParseError("star input needs \"surface\"");
    SurfaceSpec surf = surface_from_json(parsed["surface"]);
    const SympSpace& sp = surf.space();
    std::size_t nvars = on_sigma ? sp.tangent_dim() : sp.dim();
    if (!parsed.contains("f") || !parsed.contains("g"))
        throw ParseError("star input needs polynomials \"f\" and \"g\"");
    MultiPoly f = poly_from_json(parsed["f"], nvars, "f");
    MultiPoly g = poly_from_json(parsed["g"], nvars, "g");
    rb.add("build", true);

    std::optional<FoliationProjection> proj;
    std::optional<LambdaMap> lm;
    auto need_projection = [&]() -> FoliationProjection& {
        if (!proj) proj = FoliationProjection::build(surf);
        return *proj;
    };
    auto need_lambda = [&]() -> LambdaMap& {
        if (!lm) lm = LambdaMap::build(surf.reduce_to_shape_family());
        return *lm;
    };

    StarSeries result = on_sigma ? induced_star(need_projection(), f, g) : moyal_star(sp, f, g);
    rb.extra()["star_series"] = poly_to_json(result.series);
    rb.extra()["max_nu_degree"] = result.max_nu;
    rb.add("nu_degree_bound", result.max_nu <= std::min(f.degree(), g.degree()),
           "max nu " + std::to_string(result.max_nu));
    // degree-zero part is the pointwise product either way
    rb.add("classical_limit", result.series.nu_coefficient(0) == f * g);

    Rng rng(seed);
    for (const auto& check : checks) {
        if (check == "assoc") {
            rb.guarded("assoc", [&](ReportBuilder& b) {
                bool ok = true;
                for (int k = 0; k < 5 && ok; ++k) {
                    MultiPoly a = k == 0 ? f : random_low_degree_poly(rng, nvars, 3, 4);
                    MultiPoly bb = k == 0 ? g : random_low_degree_poly(rng, nvars, 3, 4);
                    MultiPoly c = random_low_degree_poly(rng, nvars, 3, 4);
                    if (on_sigma) {
                        auto& pj = need_projection();
                        ok = induced_star(pj, induced_star(pj, a, bb).series, c).series ==
                             induced_star(pj, a, induced_star(pj, bb, c).series).series;
                    } else {
                        ok = moyal_star(sp, moyal_star(sp, a, bb).series, c).series ==
                             moyal_star(sp, a, moyal_star(sp, bb, c).series).series;
                    }
                }
                b.add("assoc", ok);
            });
        } else if (check == "derivation") {
            rb.guarded("derivation", [&](ReportBuilder& b) {
                bool ok = true;
                for (int k = 0; k < 5 && ok; ++k) {
                    MultiPoly a = k == 0 && !on_sigma ? f
                                                      : random_low_degree_poly(rng, sp.dim(), 3, 4);
                    MultiPoly bb = k == 0 && !on_sigma ? g
                                                       : random_low_degree_poly(rng, sp.dim(), 3, 4);
                    ok = derivation_property_check(surf, a, bb);
                }
                b.add("derivation", ok);
            });
        } else if (check == "invariance") {
            rb.guarded("invariance", [&](ReportBuilder& b) {
                bool ok = true;
                MultiPoly fg = on_sigma ? f : random_low_degree_poly(rng, sp.tangent_dim(), 2, 3);
                MultiPoly gg = on_sigma ? g : random_low_degree_poly(rng, sp.tangent_dim(), 2, 3);
                for (int k = 0; k < 3 && ok; ++k) {
                    Vec x(sp.tangent_dim());
                    for (auto& v : x) v = rng.rational(2, 2);
                    Rational t = rng.rational(2, 3);
                    ok = transvection_invariance_check(need_projection(), need_lambda(), fg, gg, x, t);
                }
                b.add("invariance", ok);
            });
        } else {
            rb.add("unknown_check_" + check, false, "unknown check name");
        }
    }
    return rb.finish();
}

std::string report_to_text(const json& report) {
    std::ostringstream os;
    os << report["command"].get<std::string>() << " (seed " << report["seed"] << ", input "
       << report["input_digest"].get<std::string>() << ")\n";
    for (const auto& c : report["checks"]) {
        os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
        if (c.contains("detail") && !c["detail"].get<std::string>().empty())
            os << " - " << c["detail"].get<std::string>();
        os << "\n";
    }
    os << (report["passed"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return os.str();
}

bool report_passed(const json& report) { return report["passed"].get<bool>(); }

} // namespace esymm
