// Batch front-end: parse problem files, run the pipelines, emit a
// machine-readable report on stdout and a short human summary on stderr.
// Exit codes: 0 all requested checks pass, 1 a mathematical check failed,
// 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "smashquot/json_io.hpp"

using namespace smashquot;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write file: " + out_path);
        out << text << "\n";
    }
}

int run_theta(const std::string& path, const std::string& out_path) {
    QSpec q = qspec_from_json(read_file(path));
    ThetaMatrix t = theta_from_q(q);  // asserts the product identities
    json rows = json::array();
    for (const auto& row : t.theta) {
        json r = json::array();
        for (const auto& v : row) r.push_back(json::parse(unit_value_to_json(v)));
        rows.push_back(r);
    }
    json rep{{"M", q.M}, {"N", q.N}, {"theta", rows}, {"row_products_one", true},
             {"column_products_one", true}};
    write_output(rep.dump(2), out_path);
    std::cerr << "theta computed for (M,N)=(" << q.M << "," << q.N
              << "); row and column products verified\n";
    return 0;
}

int run_image(const std::string& path, const std::string& out_path,
              const std::string& emit_hopf) {
    QSpec q = qspec_from_json(read_file(path));
    HopfImageResult r = hopf_image(q);
    write_output(hopf_image_result_to_json(r), out_path);
    if (!emit_hopf.empty()) {
        if (!r.build) throw std::invalid_argument("--emit-hopf: image is not materialized");
        std::ofstream out(emit_hopf);
        if (!out) throw std::invalid_argument("cannot write file: " + emit_hopf);
        out << hopf_to_json(r.build->hopf) << "\n";
    }
    std::cerr << "Hopf image: " << r.classification.str() << ", dimension "
              << (r.dimension ? r.dimension->get_str() : std::string("infinite")) << "\n";
    bool ok = r.consistent() && (!r.factorization_checked || r.factorization_ok);
    return ok ? 0 : 1;
}

int run_validate_datum(const std::string& path, const std::string& out_path, unsigned seed) {
    QuotientDatum d = datum_from_json(read_file(path));
    GammaContext ctx(d.M, d.N_order);
    DatumReport rep = validate_datum(ctx, d);
    json j{{"valid", rep.ok}, {"failures", rep.failures}};
    if (rep.ok) {
        DatumReport cons = derived_consequences(ctx, d, seed);
        j["derived_consequences_ok"] = cons.ok;
        j["char_valued"] = is_char_valued(d);
        if (!cons.ok) j["derived_failures"] = cons.failures;
        rep.ok = rep.ok && cons.ok;
    }
    write_output(j.dump(2), out_path);
    std::cerr << (rep.ok ? "datum valid" : "datum INVALID: " + rep.str()) << "\n";
    return rep.ok ? 0 : 1;
}

int run_verify_hopf(const std::string& path, const std::string& out_path) {
    HopfSC A = hopf_from_json(read_file(path));
    HopfAxiomReport rep = verify_hopf_axioms(A);
    json j{{"dim", A.dim()},
           {"ok", rep.ok()},
           {"associativity", rep.associativity},
           {"unit", rep.unit},
           {"coassociativity", rep.coassociativity},
           {"counit", rep.counit},
           {"comult_multiplicative", rep.comult_multiplicative},
           {"counit_multiplicative", rep.counit_multiplicative},
           {"antipode", rep.antipode},
           {"commutative", rep.commutative},
           {"cocommutative", rep.cocommutative},
           {"witnesses", rep.witnesses}};
    write_output(j.dump(2), out_path);
    std::cerr << rep.str() << "\n";
    return rep.ok() ? 0 : 1;
}

int run_examples(const std::string& name, long m_param, long alpha, long beta, long alpha_order,
                 long beta_order, bool exhaustive, unsigned seed, const std::string& out_path) {
    json j;
    bool ok = true;
    if (name == "A" || name == "B") {
        if (m_param < 1) throw std::invalid_argument("examples: --m must be >= 1");
        auto ctx = std::make_shared<const GammaContext>(2, 2);
        QuotientDatum d = dihedral_family_datum(*ctx, Int(m_param), name == "B");
        TwistedBuild tb = build_twisted_quotient(ctx, d);
        HopfAxiomReport ax = verify_hopf_axioms(tb.hopf);
        ExactSequenceReport ex = verify_exact_sequence(tb);
        MapReport sec = verify_section_independence(ctx, d, tb.fq.section,
                                                    shifted_section(*ctx, tb.fq));
        ok = ax.ok() && ex.ok && sec.ok;
        j["example"] = name + "(" + std::to_string(m_param) + ")";
        j["dimension"] = tb.hopf.dim();
        j["axioms_ok"] = ax.ok();
        j["commutative"] = ax.commutative;
        j["cocommutative"] = ax.cocommutative;
        j["exact_sequence_ok"] = ex.ok;
        j["section_independence_ok"] = sec.ok;
        if (exhaustive) {
            SubgroupHNF u2 = hnf(IntMatrix::from_columns(1, {{Int(2 * m_param)}}));
            MapReport qmap = verify_quotient_map(tb, u2);
            j["quotient_map_ok"] = qmap.ok;
            ok = ok && qmap.ok;
        }
    } else if (name == "gamma33") {
        if (m_param < 2) throw std::invalid_argument("examples: gamma33 needs --m >= 2");
        GammaContext ctx(3, 3);
        QuotientDatum d;
        d.M = 3;
        d.N_order = 3;
        d.G = {0, 1, 2};
        // alpha and beta live in the same cyclic torsion when the orders
        // agree, matching roots of unity in an actual field
        UnitValue va, vb;
        if (alpha_order == beta_order) {
            d.value_spec = make_unit_group({{"w", Int(alpha_order)}});
            va = UnitValue::generator(d.value_spec, 0, Int(alpha));
            vb = UnitValue::generator(d.value_spec, 0, Int(beta));
        } else {
            d.value_spec = make_unit_group({{"a", Int(alpha_order)}, {"b", Int(beta_order)}});
            va = UnitValue::generator(d.value_spec, 0, Int(alpha));
            vb = UnitValue::generator(d.value_spec, 1, Int(beta));
        }
        std::vector<std::vector<Int>> cols;
        for (std::size_t t = 0; t < 4; ++t) {
            std::vector<Int> c(4, Int(0));
            c[t] = m_param;
            cols.push_back(std::move(c));
        }
        d.N = hnf(IntMatrix::from_columns(4, cols));
        std::vector<UnitValue> row1{UnitValue::one(d.value_spec), va, va * vb};
        std::vector<UnitValue> row2{UnitValue::one(d.value_spec), vb.inverse(), va};
        d.phi = {row1, row1, row2, row2};
        DatumReport rep = validate_datum(ctx, d);
        j["example"] = "gamma33";
        j["valid"] = rep.ok;
        if (!rep.ok) j["failures"] = rep.failures;
        ok = rep.ok;
        if (rep.ok) {
            j["char_valued"] = is_char_valued(d);
            DatumReport cons = derived_consequences(ctx, d, seed);
            j["derived_consequences_ok"] = cons.ok;
            ok = ok && cons.ok;
        }
    } else {
        throw std::invalid_argument("unknown example: " + name);
    }
    write_output(j.dump(2), out_path);
    std::cerr << "example " << name << ": " << (ok ? "all checks pass" : "CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for smash-coproduct Hopf algebra quotients and Hopf images"};
    app.require_subcommand(1);

    std::string path, out_path, emit_hopf;
    unsigned seed = 1;
    bool exhaustive = false;

    auto* theta = app.add_subcommand("theta", "compute the theta matrix of a parameter file");
    theta->add_option("file", path)->required();
    theta->add_option("--out", out_path);

    auto* image = app.add_subcommand("image", "compute the Hopf image of rho_Q");
    image->add_option("file", path)->required();
    image->add_option("--out", out_path);
    image->add_option("--emit-hopf", emit_hopf);

    auto* vd = app.add_subcommand("validate-datum", "validate a quotient datum file");
    vd->add_option("file", path)->required();
    vd->add_option("--out", out_path);
    vd->add_option("--seed", seed);

    auto* vh = app.add_subcommand("verify-hopf", "verify all Hopf axioms of a dumped algebra");
    vh->add_option("file", path)->required();
    vh->add_option("--out", out_path);

    std::string example_name;
    long m_param = 2, alpha = 1, beta = 1, alpha_order = 3, beta_order = 3;
    auto* ex = app.add_subcommand("examples", "build and verify the named example family");
    ex->add_option("name", example_name, "A, B or gamma33")->required();
    ex->add_option("--m", m_param);
    ex->add_option("--alpha", alpha, "exponent of the first value generator");
    ex->add_option("--beta", beta, "exponent of the second value generator");
    ex->add_option("--alpha-order", alpha_order);
    ex->add_option("--beta-order", beta_order);
    ex->add_option("--out", out_path);
    ex->add_option("--seed", seed);
    ex->add_flag("--exhaustive", exhaustive);

    CLI11_PARSE(app, argc, argv);

    try {
        if (theta->parsed()) return run_theta(path, out_path);
        if (image->parsed()) return run_image(path, out_path, emit_hopf);
        if (vd->parsed()) return run_validate_datum(path, out_path, seed);
        if (vh->parsed()) return run_verify_hopf(path, out_path);
        if (ex->parsed())
            return run_examples(example_name, m_param, alpha, beta, alpha_order, beta_order,
                                exhaustive, seed, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
