#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wsteen/eta_local.hpp"
#include "wsteen/expr.hpp"
#include "wsteen/homology.hpp"
#include "wsteen/suites.hpp"

namespace py = pybind11;
using namespace wsteen;

namespace {

struct PySession {
    PresetPtr preset;
    std::shared_ptr<Context> ctx;
    std::shared_ptr<WContext> wc;  // null for presets without a Witt model

    explicit PySession(const std::string& field) {
        preset = FieldPreset::by_flag(field);
        ctx = std::make_shared<Context>(preset);
        if (preset->has_witt_model() && preset->km2_vanishes())
            wc = std::make_shared<WContext>(preset);
    }
    const Algebra& alg() const { return ctx->alg(); }

    std::string eval(const std::string& text) { return alg().str(parse_expr(alg(), text)); }
    std::string mul(const std::string& a, const std::string& b) {
        return alg().str(alg().mul(parse_expr(alg(), a), parse_expr(alg(), b)));
    }
    std::string add(const std::string& a, const std::string& b) {
        return alg().str(alg().add(parse_expr(alg(), a), parse_expr(alg(), b)));
    }
    std::string act(const std::string& op, const std::string& side, const std::string& e) {
        return alg().str(alg().act(op == "sq1" ? Sq::Sq1 : Sq::Sq2,
                                   side == "left" ? Side::Left : Side::Right,
                                   parse_expr(alg(), e)));
    }
    std::string conjugate(const std::string& e) {
        return alg().str(alg().conjugate(parse_expr(alg(), e)));
    }
    std::string coproduct(const std::string& e) {
        return alg().str(alg().coproduct(parse_expr(alg(), e)));
    }
    std::vector<std::string> basis(const std::string& object, int p, int q) {
        Bidegree b{p, q};
        std::vector<std::string> out;
        if (object == "dual-steenrod")
            for (const auto& m : ctx->abasis(b)) out.push_back(alg().str(m));
        else if (object == "h-hw")
            for (const auto& it : ctx->hw_basis(b)) out.push_back(ctx->str(it));
        else if (object == "h-km")
            for (const auto& m : ctx->hkm_transversal(b)) out.push_back(alg().str(m));
        else if (object == "km-hw")
            for (const auto& it : ctx->kmhw_basis(b)) out.push_back(ctx->str(it));
        else if (object == "h-kw")
            for (const auto& it : ctx->hkw_presentation_basis(b)) out.push_back(ctx->str(it));
        else
            throw AlgebraError("unknown object '" + object + "'");
        return out;
    }
    py::dict verify(const std::string& suite, int weight_cap, int max_p, int min_q, int n_random) {
        SuiteOptions opt;
        opt.field = preset->name();
        opt.weight_cap = weight_cap;
        opt.max_p = max_p;
        opt.min_q = min_q;
        opt.n_random = n_random;
        VerificationReport rep = run_suite(suite, opt);
        py::dict d;
        d["suite"] = rep.suite;
        d["field"] = rep.field;
        d["all_passed"] = rep.all_passed();
        py::list entries;
        for (const auto& e : rep.entries) {
            py::dict je;
            je["name"] = e.name;
            je["passed"] = e.passed;
            entries.append(je);
        }
        d["entries"] = entries;
        return d;
    }
    std::string localize_t(int j) {
        if (!wc) throw PresetError("preset has no Witt model");
        EtaLocal el(*wc);
        return el.str(el.localize(wc->kwhw_t(j)));
    }
};

}  // namespace

PYBIND11_MODULE(_wsteen, m) {
    m.doc() = "dual motivic Witt Steenrod algebra engine";
    m.attr("__version__") = kArtifactVersion;
    py::register_exception<AlgebraError>(m, "AlgebraError");
    py::register_exception<PresetError>(m, "PresetError");
    py::class_<PySession>(m, "Session")
        .def(py::init<const std::string&>(), py::arg("field") = "qcl")
        .def("eval", &PySession::eval)
        .def("mul", &PySession::mul)
        .def("add", &PySession::add)
        .def("act", &PySession::act, py::arg("op"), py::arg("side"), py::arg("expr"))
        .def("conjugate", &PySession::conjugate)
        .def("coproduct", &PySession::coproduct)
        .def("basis", &PySession::basis, py::arg("object"), py::arg("p"), py::arg("q"))
        .def("verify", &PySession::verify, py::arg("suite"), py::arg("weight_cap") = 8,
             py::arg("max_p") = 12, py::arg("min_q") = -6, py::arg("n_random") = 50)
        .def("localize_t", &PySession::localize_t);
}
