// Python bindings for the main operations. Arbitrary-precision integers
// cross the boundary as Python ints (via decimal strings), exact rationals
// as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "monty/records.hpp"

namespace py = pybind11;
using namespace monty;

namespace {

Int int_from_py(py::handle obj) { return parse_int(py::str(obj).cast<std::string>()); }

py::object int_to_py(const Int& x) {
    return py::cast<py::object>(py::int_(py::str(to_string(x))));
}

Rat rat_from_py(py::handle obj) {
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator"))
        return make_rat(int_from_py(obj.attr("numerator")), int_from_py(obj.attr("denominator")));
    return Rat(int_from_py(obj));
}

py::object rat_to_py(const Rat& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(int_to_py(q.get_num()), int_to_py(q.get_den()));
}

std::vector<Int> int_vec_from_py(py::sequence seq) {
    std::vector<Int> v;
    for (py::handle item : seq) v.push_back(int_from_py(item));
    return v;
}

py::list int_vec_to_py(const std::vector<Int>& v) {
    py::list out;
    for (const Int& x : v) out.append(int_to_py(x));
    return out;
}

IntPoly poly_from_py(py::sequence ascending) { return IntPoly(int_vec_from_py(ascending)); }

py::list poly_to_py(const IntPoly& f) { return int_vec_to_py(f.coeffs()); }

IntMatrix matrix_from_py(py::sequence rows) {
    std::vector<std::vector<Int>> data;
    for (py::handle row : rows) data.push_back(int_vec_from_py(row.cast<py::sequence>()));
    std::size_t cols = data.empty() ? 0 : data[0].size();
    IntMatrix m(data.size(), cols);
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (data[i].size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = data[i][j];
    }
    return m;
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(int_to_py(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

py::dict gp_to_py(const GeometricProgression& gp) {
    py::dict d;
    d["c"] = int_vec_to_py(gp.c);
    d["n"] = int_to_py(gp.modulus);
    d["ratio"] = gp.ratio ? int_to_py(*gp.ratio) : py::object(py::none());
    return d;
}

GeometricProgression gp_from_py(py::handle obj) {
    py::dict d = obj.cast<py::dict>();
    GeometricProgression gp;
    gp.c = int_vec_from_py(d["c"].cast<py::sequence>());
    gp.modulus = int_from_py(d["n"]);
    if (d.contains("ratio") && !d["ratio"].is_none()) gp.ratio = int_from_py(d["ratio"]);
    return gp;
}

py::dict pair_to_py(const PolyPair& p) {
    py::dict d;
    d["status"] = "pair";
    d["f1"] = poly_to_py(p.f1);
    d["f2"] = poly_to_py(p.f2);
    d["n"] = int_to_py(p.modulus);
    d["r"] = int_to_py(p.root);
    d["skew"] = rat_to_py(p.skew);
    d["resultant"] = int_to_py(p.resultant);
    d["delta_partial"] = int_to_py(p.delta_partial);
    d["delta_hat"] = int_to_py(p.delta_hat);
    d["delta_c"] = int_to_py(p.delta_c);
    d["norm1_sq"] = rat_to_py(p.norm1_sq);
    d["norm2_sq"] = rat_to_py(p.norm2_sq);
    d["sin2_theta"] = rat_to_py(p.sin2);
    return d;
}

py::dict outcome_to_py(const SelectOutcome& out) {
    if (const auto* pair = std::get_if<PolyPair>(&out)) return pair_to_py(*pair);
    py::dict d;
    if (const auto* ff = std::get_if<FactorFound>(&out)) {
        d["status"] = "factor";
        d["n"] = int_to_py(ff->modulus);
        d["factor"] = int_to_py(ff->factor);
    } else if (const auto* dp = std::get_if<DegeneratePair>(&out)) {
        d["status"] = "degenerate-pair";
        d["f1"] = poly_to_py(dp->f1);
        d["f2"] = poly_to_py(dp->f2);
        d["reason"] = dp->reason;
    } else {
        const auto& dg = std::get<DegenerateGP>(out);
        d["status"] = "degenerate-gp";
        d["reason"] = dg.reason;
    }
    return d;
}

py::dict gp_outcome_to_py(const GpOutcome& out) {
    if (const auto* gp = std::get_if<GeometricProgression>(&out)) {
        py::dict d = gp_to_py(*gp);
        d["status"] = "gp";
        return d;
    }
    const auto& ff = std::get<FactorFound>(out);
    py::dict d;
    d["status"] = "factor";
    d["n"] = int_to_py(ff.modulus);
    d["factor"] = int_to_py(ff.factor);
    return d;
}

std::vector<Rat> skews_from_py(py::sequence seq) {
    std::vector<Rat> out;
    for (py::handle s : seq) out.push_back(rat_from_py(s));
    return out;
}

py::dict report_to_py(const VerifyReport& rep) {
    py::dict d;
    d["instance"] = rep.instance;
    py::list checks;
    for (const CheckResult& c : rep.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["status"] = c.status == CheckStatus::pass     ? "pass"
                       : c.status == CheckStatus::fail   ? "fail"
                                                         : "skipped";
        py::dict w;
        for (const auto& [key, value] : c.witnesses) w[py::str(key)] = value;
        cd["witnesses"] = w;
        checks.append(cd);
    }
    d["checks"] = checks;
    d["all_passed"] = rep.all_passed();
    return d;
}

}  // namespace

PYBIND11_MODULE(_monty, m) {
    m.doc() = "Exact-arithmetic polynomial selection via modular geometric progressions";

    m.def("det", [](py::sequence rows) { return int_to_py(det(matrix_from_py(rows))); });
    m.def("adjugate",
          [](py::sequence rows) { return matrix_to_py(adjugate(matrix_from_py(rows))); });
    m.def("hnf_with_transform", [](py::sequence rows) {
        HnfResult r = hnf_with_transform(matrix_from_py(rows));
        return py::make_tuple(matrix_to_py(r.h), matrix_to_py(r.u));
    });
    m.def("integer_kernel",
          [](py::sequence rows) { return matrix_to_py(integer_kernel(matrix_from_py(rows))); });
    m.def("delta", [](py::sequence rows) { return int_to_py(delta(matrix_from_py(rows))); });
    m.def("vol2", [](py::sequence rows) { return int_to_py(vol2(matrix_from_py(rows))); });

    m.def("resultant", [](py::sequence f1, py::sequence f2) {
        return int_to_py(resultant(poly_from_py(f1), poly_from_py(f2)));
    });
    m.def("sylvester", [](py::sequence f1, py::sequence f2) {
        return matrix_to_py(sylvester(poly_from_py(f1), poly_from_py(f2)));
    });
    m.def("bezout", [](py::sequence f1, py::sequence f2) {
        return matrix_to_py(bezout(poly_from_py(f1), poly_from_py(f2)));
    });
    m.def("first_subresultant", [](py::sequence f1, py::sequence f2) {
        return poly_to_py(first_subresultant(poly_from_py(f1), poly_from_py(f2)));
    });
    m.def("ct_vector", [](py::sequence f1, py::sequence f2, std::size_t t) {
        return int_vec_to_py(ct_vector(poly_from_py(f1), poly_from_py(f2), t));
    });
    m.def("skewed_norm_sq", [](py::sequence f, py::handle s) {
        return rat_to_py(skewed_norm_sq(poly_from_py(f), rat_from_py(s)));
    });
    m.def("sin2_theta", [](py::sequence f1, py::sequence f2, py::handle s) {
        return rat_to_py(sin2_theta(poly_from_py(f1), poly_from_py(f2), rat_from_py(s)));
    });
    m.def("eval_mod", [](py::sequence f, py::handle r, py::handle n) {
        return int_to_py(eval_mod(poly_from_py(f), int_from_py(r), int_from_py(n)));
    });

    m.def(
        "validate_gp",
        [](py::sequence c, py::handle n, py::handle ratio) {
            std::optional<Int> r;
            if (!ratio.is_none()) r = int_from_py(ratio);
            return gp_outcome_to_py(validate_gp(int_vec_from_py(c), int_from_py(n), r));
        },
        py::arg("c"), py::arg("n"), py::arg("ratio") = py::none());
    m.def("gp_from_polys", [](py::sequence f1, py::sequence f2, std::size_t t, py::handle n) {
        return gp_outcome_to_py(gp_from_polys(poly_from_py(f1), poly_from_py(f2), t,
                                              int_from_py(n)));
    });
    m.def("build_gp_d2", [](py::handle a, py::handle k, py::handle p, py::handle mm,
                            py::handle n) {
        return gp_outcome_to_py(build_gp_d2(
            GPParamsD2{int_from_py(a), int_from_py(k), int_from_py(p), int_from_py(mm)},
            int_from_py(n)));
    });
    m.def("build_gp_d3", [](py::handle a, py::handle k, py::handle p, py::handle mm,
                            py::handle n) {
        return gp_outcome_to_py(build_gp_d3(
            GPParamsD3{int_from_py(a), int_from_py(k), int_from_py(p), int_from_py(mm)},
            int_from_py(n)));
    });
    m.def(
        "search_gp_d2",
        [](py::handle n, std::size_t count, unsigned long seed) {
            GpSearchOptions opts;
            opts.count = count;
            opts.seed = seed;
            py::list out;
            for (const GPParamsD2& q : search_gp_d2(int_from_py(n), opts)) {
                py::dict d;
                d["a"] = int_to_py(q.a);
                d["k"] = int_to_py(q.k);
                d["p"] = int_to_py(q.p);
                d["m"] = int_to_py(q.m);
                out.append(d);
            }
            return out;
        },
        py::arg("n"), py::arg("count") = 5, py::arg("seed") = 0);

    m.def(
        "polys_from_gp",
        [](py::handle gp, py::handle skew) {
            return outcome_to_py(polys_from_gp(gp_from_py(gp), rat_from_py(skew)));
        },
        py::arg("gp"), py::arg("skew") = py::int_(1));
    m.def("skew_search", [](py::handle gp, py::sequence grid) {
        SkewSearchResult r = skew_search(gp_from_py(gp), skews_from_py(grid));
        py::dict d = outcome_to_py(r.outcome);
        d["skew"] = rat_to_py(r.skew);
        return d;
    });

    m.def(
        "verify_pair",
        [](py::handle gp, py::handle pair_dict, py::sequence skews) {
            py::dict pd = pair_dict.cast<py::dict>();
            PolyPair pair;
            pair.f1 = poly_from_py(pd["f1"].cast<py::sequence>());
            pair.f2 = poly_from_py(pd["f2"].cast<py::sequence>());
            pair.modulus = int_from_py(pd["n"]);
            pair.root = int_from_py(pd["r"]);
            pair.skew = rat_from_py(pd["skew"]);
            pair.resultant = int_from_py(pd["resultant"]);
            pair.delta_partial = int_from_py(pd["delta_partial"]);
            pair.delta_hat = int_from_py(pd["delta_hat"]);
            pair.delta_c = int_from_py(pd["delta_c"]);
            pair.norm1_sq = rat_from_py(pd["norm1_sq"]);
            pair.norm2_sq = rat_from_py(pd["norm2_sq"]);
            pair.sin2 = rat_from_py(pd["sin2_theta"]);
            return report_to_py(check_theorem2(gp_from_py(gp), pair, skews_from_py(skews)));
        },
        py::arg("gp"), py::arg("pair"), py::arg("skews"));
}
