#include <algorithm>
#include <iostream>
#include <sstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gwdesc/engine.hpp"
#include "gwdesc/error.hpp"
#include "gwdesc/fixtures.hpp"
#include "gwdesc/io.hpp"
#include "gwdesc/moduli.hpp"
#include "gwdesc/phase_space.hpp"
#include "gwdesc/verify.hpp"

using namespace gwdesc;

namespace {

constexpr int kIdentityFailure = 1;
constexpr int kInputError = 2;

struct Common {
    std::string model = "P1";
    std::int64_t qmax = 1;
    std::int64_t xdeg = 4;
    std::int64_t dmax = 2;
    std::string gamma0;
};

EngineOptions engine_options(const Common& c, const GeometryModel& model, const std::string& route)
{
    EngineOptions o;
    if (!c.gamma0.empty()) {
        o.reduction_divisor = parse_class(c.gamma0, model);
    }
    if (route == "dilaton") {
        o.unstable_route = UnstableRoute::Dilaton;
    } else if (route != "divisor") {
        throw ConfigError("route must be 'divisor' or 'dilaton'");
    }
    return o;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
    } else {
        write_text_file(out, text);
    }
}

std::vector<int> parse_ints(const std::string& text)
{
    std::vector<int> v;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error&) {
            throw ValidationError("expected a comma-separated integer list, got '" + text + "'");
        }
    }
    return v;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Genus-zero descendant correlators, the transform T and its checks"};
    app.require_subcommand(1);
    Common common;

    // correlator
    auto* corr = app.add_subcommand("correlator", "evaluate one correlator or its q-series");
    std::string beta_text;
    std::string ins_text;
    std::string taut_path;
    std::string route = "divisor";
    int genus = 0;
    corr->add_option("--model", common.model, "fixture name or geometry file")->required();
    corr->add_option("--beta", beta_text, "curve class, e.g. 1 or 1,0");
    corr->add_option("--qmax", common.qmax, "q-degree bound when --beta is omitted");
    corr->add_option("--genus", genus, "genus (>= 1 only at beta = 0)");
    corr->add_option("--ins", ins_text, "insertions tau(d[,e]):label, comma separated");
    corr->add_option("--taut", taut_path, "tautological integrals for genus >= 1");
    corr->add_option("--route", route, "unstable reduction: divisor or dilaton");
    corr->add_option("--gamma0", common.gamma0, "reduction divisor, e.g. h:3");

    // intersect
    auto* inter = app.add_subcommand("intersect", "psi-class integral on the genus-0 moduli space");
    int n_marks = 3;
    std::string psi_text;
    inter->add_option("--n", n_marks, "number of marked points")->required();
    inter->add_option("--psi", psi_text, "exponents, comma separated")->required();

    // transform
    auto* trans = app.add_subcommand("transform", "dump T and its inverse as JSON");
    std::string out_path;
    trans->add_option("--model", common.model)->required();
    trans->add_option("--qmax", common.qmax);
    trans->add_option("--dmax", common.dmax);
    trans->add_option("--out", out_path);
    trans->add_option("--gamma0", common.gamma0);

    // potential
    auto* pot = app.add_subcommand("potential", "dump F_st, G, G(Tx) or Phi as JSON");
    std::string which = "F";
    pot->add_option("--model", common.model)->required();
    pot->add_option("--which", which, "F, G, GT or Phi");
    pot->add_option("--xdeg", common.xdeg);
    pot->add_option("--dmax", common.dmax);
    pot->add_option("--qmax", common.qmax);
    pot->add_option("--out", out_path);

    // verify
    auto* ver = app.add_subcommand("verify", "run identity suites");
    std::vector<std::string> suites;
    VerifyOptions vo;
    ver->add_option("--model", common.model)->required();
    ver->add_option("--suite", suites, "suite name(s) or 'all'")->required();
    ver->add_option("--xdeg", vo.policy.max_x_degree);
    ver->add_option("--dmax", vo.policy.max_descendant);
    ver->add_option("--qmax", vo.policy.max_beta_degree);
    ver->add_option("--nmax", vo.nmax);
    ver->add_option("--samples", vo.samples);
    ver->add_option("--seed", vo.seed);

    // validate
    auto* val = app.add_subcommand("validate", "check a geometry model");
    val->add_option("--model", common.model)->required();

    // wdvv
    auto* wd = app.add_subcommand("wdvv", "plane rational curve counts N_d");
    int wdvv_dmax = 4;
    wd->add_option("--dmax", wdvv_dmax);

    // export-fixture
    auto* exp = app.add_subcommand("export-fixture", "write a built-in fixture as JSON");
    exp->add_option("--model", common.model)->required();
    exp->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*corr) {
            const auto fixture = load_model(common.model);
            std::optional<TautTable> taut;
            if (!taut_path.empty()) {
                taut = taut_table_from_json(read_text_file(taut_path));
            }
            const Engine engine(fixture.model, fixture.table, engine_options(common, fixture.model, route), taut);
            const auto ins = parse_insertions(ins_text, fixture.model);
            const bool generalized = std::any_of(ins.begin(), ins.end(), [](const Insertion& x) { return x.e != 0; });
            auto value = [&](const CurveClass& beta) {
                if (generalized) {
                    if (genus != 0) {
                        throw OutOfScope("tau(d,e) insertions are genus 0 only");
                    }
                    return engine.generalized_correlator(beta, ins);
                }
                return engine.descendant_correlator(genus, beta, ins);
            };
            if (!beta_text.empty()) {
                std::cout << to_string(value(parse_beta(beta_text, fixture.model.lattice_rank))) << "\n";
            } else {
                if (genus != 0) {
                    throw OutOfScope("q-series are genus 0 only; pass --beta 0 for higher genus");
                }
                const auto trunc = fixture.model.novikov_truncation(common.qmax);
                NovikovSeries s(trunc);
                for (const auto& beta : trunc.effective_classes()) {
                    s.add_term(beta, value(beta));
                }
                std::cout << to_string(s) << "\n";
            }
        } else if (*inter) {
            auto psi = parse_ints(psi_text);
            if (static_cast<int>(psi.size()) != n_marks) {
                throw ValidationError("--psi needs exactly n entries");
            }
            std::cout << to_string(psi_integral_genus0(psi)) << "\n";
        } else if (*trans) {
            const auto fixture = load_model(common.model);
            const Engine engine(fixture.model, fixture.table, engine_options(common, fixture.model, "divisor"));
            const PhaseSpace ps(engine, {common.qmax, 0, common.dmax});
            const auto t = ps.build_T();
            const auto inv = PhaseSpace::invert_T(t);
            if (!(t * inv == TransformT::identity(t.truncation, t.indices))) {
                std::cerr << "error: T * T^-1 is not the identity\n";
                return kIdentityFailure;
            }
            emit(transform_to_json(fixture.model, t, inv), out_path);
        } else if (*pot) {
            const auto fixture = load_model(common.model);
            const Engine engine(fixture.model, fixture.table);
            const PhaseSpace ps(engine, {common.qmax, common.xdeg, common.dmax});
            if (which == "F") {
                emit(potential_to_json(ps.potential_F_st()), out_path);
            } else if (which == "G") {
                emit(potential_to_json(ps.potential_G()), out_path);
            } else if (which == "GT") {
                emit(potential_to_json(PhaseSpace::compose(ps.potential_G(), ps.build_T())), out_path);
            } else if (which == "Phi") {
                emit(potential_to_json(ps.primary_potential_Phi()), out_path);
            } else {
                throw ConfigError("--which must be F, G, GT or Phi");
            }
        } else if (*ver) {
            const auto fixture = load_model(common.model);
            if (suites.size() == 1 && suites[0] == "all") {
                suites = suite_names();
            }
            bool ok = true;
            for (const auto& name : suites) {
                const auto r = run_suite(name, fixture, vo);
                std::cout << format_result(r) << "\n";
                ok = ok && r.passed();
            }
            return ok ? 0 : kIdentityFailure;
        } else if (*val) {
            const auto fixture = load_model(common.model);
            const auto report = validate_model(fixture.model);
            for (const auto& c : report.checks) {
                std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                          << "\n";
            }
            std::cout << "primary entries: " << fixture.table.size() << "\n";
            return report.ok() ? 0 : kInputError;
        } else if (*wd) {
            for (const auto& [d, v] : wdvv_p2(wdvv_dmax)) {
                std::cout << "N_" << d << " = " << to_string(v) << "\n";
            }
        } else if (*exp) {
            emit(model_to_json(load_fixture(common.model)), out_path);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return 0;
}
