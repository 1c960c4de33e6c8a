#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewspec/builtin_examples.hpp"
#include "skewspec/census.hpp"
#include "skewspec/characterization.hpp"
#include "skewspec/errors.hpp"
#include "skewspec/linalg.hpp"
#include "skewspec/verification.hpp"

namespace py = pybind11;
using namespace skewspec;

namespace {

py::int_ to_py_int(const mpz_class& z) {
    // Round-trip through the decimal string; exact for any size.
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

mpz_class mpz_from_py(const py::int_& x) {
    return mpz_class(static_cast<std::string>(py::repr(x)));
}

py::list int_matrix_rows(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py_int(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::list rat_matrix_rows(const RatMatrix& m) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.append(fraction(m(i, j).get_str()));
        rows.append(row);
    }
    return rows;
}

py::list poly_coeffs(const IntPolynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_py_int(c));
    return out;
}

py::list mpz_vec(const std::vector<mpz_class>& v) {
    py::list out;
    for (const auto& z : v) out.append(to_py_int(z));
    return out;
}

py::dict fn_report_dict(const FnReport& r) {
    py::dict d;
    d["order"] = r.order;
    d["det_walk"] = to_py_int(r.det_walk);
    d["reduced"] = r.reduced_integral ? py::object(to_py_int(r.reduced)) : py::none();
    d["in_fn"] = r.is_member;
    d["odd_primes"] = mpz_vec(r.odd_primes);
    d["k"] = r.k;
    d["bound"] = r.bound;
    d["factorization"] = r.det_factors.to_string();
    return d;
}

py::dict audit_dict(const AuditResult& a) {
    py::dict d;
    py::list checks;
    for (const auto& c : a.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["pass"] = c.pass;
        cd["detail"] = c.detail;
        checks.append(cd);
    }
    d["checks"] = checks;
    d["all_passed"] = a.all_passed();
    return d;
}

py::dict record_dict(const CensusRecord& r) {
    py::dict d;
    d["canon"] = r.canon;
    d["n"] = r.n;
    d["controllable"] = r.controllable;
    d["det_walk"] = to_py_int(r.det_walk);
    d["reduced"] = r.reduced_integral ? py::object(to_py_int(r.reduced)) : py::none();
    d["in_fn"] = r.in_fn;
    d["odd_primes"] = mpz_vec(r.odd_primes);
    d["k"] = r.k;
    d["bound"] = r.bound;
    d["fingerprint_digest"] = r.fingerprint_digest;
    d["self_transpose"] = r.self_transpose;
    d["wdgss_by_criterion"] = r.wdgss_by_criterion;
    if (r.mates_resolved) {
        d["mates"] = r.mates;
        d["mate_levels"] = mpz_vec(r.mate_levels);
    } else {
        d["mates"] = py::none();
        d["mate_levels"] = py::none();
    }
    d["bound_violation"] = r.bound_violation;
    return d;
}

py::dict mate_report_dict(const MateClassReport& rep) {
    py::dict d;
    d["representative"] = rep.representative;
    d["members"] = rep.members;
    d["certificates_available"] = rep.certificates_available;
    py::list levels;
    for (const auto& c : rep.certificates) levels.append(to_py_int(c.level));
    d["levels"] = levels;
    py::list audits;
    for (const auto& a : rep.certificate_audits) audits.append(audit_dict(a));
    d["certificate_audits"] = audits;
    py::list pair;
    for (const auto& a : rep.pairwise_audits) pair.append(audit_dict(a));
    d["pairwise_audits"] = pair;
    return d;
}

}  // namespace

PYBIND11_MODULE(_skewspec, m) {
    m.doc() = "Exact spectral characterization of small oriented graphs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<NotControllableError>(m, "NotControllableError", PyExc_ValueError);
    py::register_exception<InapplicableError>(m, "InapplicableError", PyExc_ValueError);
    py::register_exception<MateVerificationError>(m, "MateVerificationError",
                                                  PyExc_RuntimeError);

    py::class_<OrientedGraph>(m, "OrientedGraph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("arcs"))
        .def_static("from_compact", &OrientedGraph::from_compact)
        .def_static("from_text", &OrientedGraph::from_text)
        .def_static("parse", &OrientedGraph::parse)
        .def_property_readonly("order", &OrientedGraph::order)
        .def_property_readonly("arcs", &OrientedGraph::arcs)
        .def("direction", &OrientedGraph::direction)
        .def("transposed", &OrientedGraph::transposed)
        .def("to_compact", &OrientedGraph::to_compact)
        .def("to_text", &OrientedGraph::to_text)
        .def("__eq__", [](const OrientedGraph& a, const OrientedGraph& b) { return a == b; })
        .def("__repr__",
             [](const OrientedGraph& g) { return "OrientedGraph('" + g.to_compact() + "')"; });

    m.def("skew_adjacency",
          [](const OrientedGraph& g) { return int_matrix_rows(skew_adjacency(g)); });
    m.def("walk_matrix",
          [](const OrientedGraph& g) { return int_matrix_rows(walk_matrix(g)); });
    m.def("det_walk",
          [](const OrientedGraph& g) { return to_py_int(det_bareiss(walk_matrix(g))); });
    m.def("is_controllable", &is_controllable);
    m.def("char_polys", [](const OrientedGraph& g) {
        SpectralFingerprint fp = fingerprint(g);
        return py::make_tuple(poly_coeffs(fp.p_skew), poly_coeffs(fp.p_ones_skew));
    });
    m.def("fingerprint_digest",
          [](const OrientedGraph& g) { return fingerprint(g).digest_hex(); });
    m.def("generalized_cospectral", &generalized_cospectral);

    m.def("is_isomorphic", [](const OrientedGraph& a, const OrientedGraph& b) -> py::object {
        auto w = is_isomorphic(a, b);
        if (!w) return py::none();
        return py::cast(w->images());
    });
    m.def("canonical_form", &canonical_form);

    m.def("recover_q", [](const OrientedGraph& d, const OrientedGraph& c) {
        QCertificate cert = recover_q(d, c);
        py::dict out;
        out["level"] = to_py_int(cert.level);
        out["q"] = rat_matrix_rows(cert.q);
        out["verified"] = true;
        return out;
    });

    m.def("fn_membership", [](const OrientedGraph& g) { return fn_report_dict(fn_membership(g)); });
    m.def("mate_bound", [](const OrientedGraph& g) { return mate_bound(fn_membership(g)); });
    m.def("wdgss_criterion", [](const OrientedGraph& g) {
        WdgssVerdict v = wdgss_criterion(g);
        py::dict d;
        d["self_transpose"] = v.self_transpose;
        d["reduced_is_odd_prime"] = v.reduced_is_odd_prime;
        d["applicable"] = v.applicable;
        d["verdict"] = v.verdict;
        return d;
    });
    m.def("snf_structure_check", &snf_structure_check);
    m.def("walk_invariant_factors", [](const OrientedGraph& g) {
        return mpz_vec(smith_normal_form(walk_matrix(g).transposed()).diag);
    });

    m.def("factorize", [](const py::int_& x) {
        FactoredInteger f = factorize(mpz_from_py(x));
        py::dict factors;
        for (const auto& [p, e] : f.factors) factors[to_py_int(p)] = e;
        return py::make_tuple(f.sign, factors);
    });
    m.def("is_prime", [](const py::int_& x) { return is_prime(mpz_from_py(x)); });

    m.def("find_mates",
          [](const OrientedGraph& g, int threads) {
              return mate_report_dict(find_mates(g, threads));
          },
          py::arg("graph"), py::arg("threads") = 1);
    m.def("verify_candidate_mate", [](const OrientedGraph& d, const OrientedGraph& c) {
        return mate_report_dict(verify_candidate_mate(d, c));
    });

    m.def("census",
          [](int n, int threads) {
              CensusResult res = run_census(n, threads);
              py::list records;
              for (const auto& r : res.records) records.append(record_dict(r));
              py::list findings;
              for (const auto& f : res.findings) {
                  py::dict fd;
                  fd["kind"] = f.kind;
                  fd["canon"] = f.canon;
                  fd["detail"] = f.detail;
                  findings.append(fd);
              }
              py::dict out;
              out["records"] = records;
              out["findings"] = findings;
              out["classes"] = res.stats.classes;
              out["bound_violations"] = res.stats.bound_violations;
              out["audit_checks"] = res.stats.audit_checks;
              out["audit_failures"] = res.stats.audit_failures;
              return out;
          },
          py::arg("n"), py::arg("threads") = 1);

    m.def("verify_examples", []() {
        VerificationReport rep = verify_builtin_examples();
        py::list lines;
        for (const auto& l : rep.lines)
            lines.append(py::make_tuple(l.name, l.expected, l.actual, l.pass));
        return py::make_tuple(rep.all_passed(), lines);
    });

    m.def("example1_d", []() { return builtin::example1_d(); });
    m.def("example1_c", []() { return builtin::example1_c(); });
    m.def("example2_d", []() { return builtin::example2_d(); });
}
