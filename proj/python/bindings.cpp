#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "monopole/json_io.hpp"
#include "monopole/scenario.hpp"

namespace py = pybind11;
using namespace monopole;

namespace {

std::string dump(const Json& j)
{
    return j.dump();
}

ZpVirtualRep rep_from_list(long p, const std::vector<long long>& mult)
{
    std::vector<Int> m;
    m.reserve(mult.size());
    for (long long x : mult)
        m.push_back(to_int(x));
    return ZpVirtualRep(p, std::move(m));
}

Json certificate_to_json(const PolynomialityCheck& c)
{
    Json orders = Json::array();
    for (const auto& o : c.orders)
        orders.push_back(
            Json{{"root", o.root_exponent}, {"required", o.required}, {"attained", o.attained}});
    return Json{{"polynomial", c.polynomial},
                {"witness_root", c.witness_root ? Json(*c.witness_root) : Json(nullptr)},
                {"orders", std::move(orders)}};
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact smoothness obstructions for 4-manifold families and cyclic group actions";

    py::register_exception<ParseError>(m, "LatticeParseError", PyExc_ValueError);

    m.def("invariants", [](const std::string& lattice) {
        auto L = IntersectionLattice::parse(lattice);
        auto inv = lattice_invariants(L);
        return dump(Json{{"lattice", L.str()},
                         {"rank", inv.rank},
                         {"signature", inv.signature},
                         {"b_plus", inv.b_plus},
                         {"b_minus", inv.b_minus},
                         {"even", inv.even}});
    });

    m.def(
        "dirac_index",
        [](const std::string& lattice, long long c2, bool spin) {
            auto L = IntersectionLattice::parse(lattice);
            auto s = spin ? SpinCData::spin() : SpinCData::with_c_squared(to_int(c2));
            Int d = dirac_index(L, s);
            if (!d.fits_slong_p())
                throw std::overflow_error("index exceeds 64 bits");
            return static_cast<long long>(d.get_si());
        },
        py::arg("lattice"), py::arg("c2") = 0, py::arg("spin") = false);

    m.def("run_check", [](const std::string& name, const std::string& hypothesis_json) {
        return dump(run_named_check(name, Json::parse(hypothesis_json)).to_json());
    });

    m.def(
        "check_furuta",
        [](const std::string& lattice, long long b_plus) {
            std::optional<long long> override;
            if (b_plus >= 0)
                override = b_plus;
            return dump(check_furuta_point(IntersectionLattice::parse(lattice), override)
                            .to_json());
        },
        py::arg("lattice"), py::arg("b_plus") = -1);

    m.def("check_even_involution",
          [](long long sigma, long long inv_dim, const std::string& type) {
              InvolutionType t =
                  type == "even" ? InvolutionType::Even : InvolutionType::Odd;
              return dump(check_even_involution(sigma, inv_dim, t).to_json());
          });

    m.def("check_zp_spin", [](long long d0, long long inv_dim) {
        return dump(check_zp_spin(d0, inv_dim).to_json());
    });

    m.def("check_ten_eighths",
          [](long p, const std::vector<long long>& hplus, const std::vector<long long>& v,
             const std::vector<long long>& vp) {
              return dump(check_ten_eighths_equivariant(p, rep_from_list(p, hplus),
                                                        rep_from_list(p, v),
                                                        rep_from_list(p, vp))
                              .to_json());
          });

    m.def("scenario_branched_cover", [](long p, long long g, long long b) {
        return dump(scenario_branched_cover(p, g, b).to_json());
    });
    m.def(
        "scenario_spin_family",
        [](long long a, long long b) { return dump(scenario_spin_family(a, b).to_json()); });
    m.def(
        "scenario_nonspin_family",
        [](long long a, long long b, bool trivialize_bundle) {
            return dump(scenario_nonspin_family(a, b, trivialize_bundle).to_json());
        },
        py::arg("a"), py::arg("b"), py::arg("trivialize_bundle") = false);

    m.def("catalog_json", [] {
        auto rows = run_catalog();
        Json j = Json::array();
        long long bad = 0;
        for (const auto& r : rows) {
            j.push_back(
                Json{{"id", r.id}, {"expected", r.expected}, {"actual", r.actual}, {"ok", r.ok}});
            if (!r.ok)
                ++bad;
        }
        return dump(Json{{"rows", std::move(j)}, {"mismatches", bad}});
    });

    // Representation-ring operations on plain multiplicity vectors.
    m.def("lambda_total", [](long p, const std::vector<long long>& mult) {
        return dump(rep_to_json(lambda_total(rep_from_list(p, mult))));
    });
    m.def("psi2", [](long p, const std::vector<long long>& mult) {
        return dump(rep_to_json(psi2(rep_from_list(p, mult))));
    });
    m.def("k_euler", [](long p, const std::vector<long long>& mult) {
        return dump(rep_to_json(k_euler(rep_from_list(p, mult))));
    });
    m.def("character_at", [](long p, const std::vector<long long>& mult, long k) {
        auto c = character_at(rep_from_list(p, mult), k);
        Json coeffs = Json::array();
        for (const auto& x : c.coeffs())
            coeffs.push_back(json_int(x));
        return dump(coeffs);
    });
    m.def("repring_divide",
          [](long p, const std::vector<long long>& a, const std::vector<long long>& b) {
              auto q = repring_exact_divide(rep_from_list(p, a), rep_from_list(p, b));
              return dump(q ? rep_to_json(*q) : Json(nullptr));
          });

    // Divisibility certificates behind the Z/2 and Z/p verdicts.
    m.def("z2_certificate", [](long long b_plus, long long d_plus, long long d_minus) {
        return dump(certificate_to_json(
            is_polynomial(z2_divisibility_instance(b_plus, d_plus, d_minus))));
    });
    m.def("zp_certificate",
          [](long p, const std::vector<long long>& d, const std::vector<long long>& h) {
              return dump(certificate_to_json(is_polynomial(zp_divisibility_instance(p, d, h))));
          });

    m.def("binomial_mod2", [](unsigned long long n, unsigned long long k) {
        return binomial_mod2(n, k);
    });

    m.attr("__version__") = "0.1.0";
}
