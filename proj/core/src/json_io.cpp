#include "smashquot/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace smashquot {

using nlohmann::json;

namespace {

json unit_group_json(const UnitGroupSpec& spec) {
    json gens = json::array();
    for (const auto& g : spec.generators()) {
        json j;
        j["name"] = g.name;
        j["order"] = g.order ? json(g.order->get_str()) : json(nullptr);
        gens.push_back(j);
    }
    return json{{"generators", gens}};
}

UnitGroupRef unit_group_parse(const json& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("unit_group: expected {\"generators\": [...]}");
    std::vector<UnitGenerator> gens;
    for (const auto& g : j["generators"]) {
        UnitGenerator u;
        u.name = g.at("name").get<std::string>();
        const auto& o = g.at("order");
        if (o.is_null()) {
            u.order = std::nullopt;
        } else if (o.is_number_integer()) {
            u.order = Int(o.get<long>());
        } else if (o.is_string()) {
            u.order = Int(o.get<std::string>());
        } else {
            throw std::invalid_argument("unit_group: order must be integer, string or null");
        }
        gens.push_back(std::move(u));
    }
    return make_unit_group(std::move(gens));
}

json unit_value_json(const UnitValue& v) {
    json j = json::object();
    const auto& spec = *v.spec();
    for (std::size_t i = 0; i < spec.size(); ++i)
        if (v.exponents()[i] != 0) {
            const Int& e = v.exponents()[i];
            if (e.fits_slong_p())
                j[spec.gen(i).name] = e.get_si();
            else
                j[spec.gen(i).name] = e.get_str();
        }
    return j;
}

UnitValue unit_value_parse(const json& j, const UnitGroupRef& spec) {
    if (!j.is_object()) throw std::invalid_argument("unit value: expected an exponent object");
    std::vector<Int> exps(spec->size(), Int(0));
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto idx = spec->index_of(it.key());
        if (!idx) throw std::invalid_argument("unit value: unknown generator " + it.key());
        if (it.value().is_number_integer())
            exps[*idx] = Int(it.value().get<long>());
        else if (it.value().is_string())
            exps[*idx] = Int(it.value().get<std::string>());
        else
            throw std::invalid_argument("unit value: exponent must be integer or string");
    }
    return UnitValue(spec, std::move(exps));
}

json int_vec_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v)
        a.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
    return a;
}

std::vector<Int> int_vec_parse(const json& a) {
    std::vector<Int> v;
    for (const auto& x : a) {
        if (x.is_number_integer())
            v.emplace_back(x.get<long>());
        else if (x.is_string())
            v.emplace_back(x.get<std::string>());
        else
            throw std::invalid_argument("integer vector: bad entry");
    }
    return v;
}

json subgroup_json(const SubgroupHNF& s) {
    json cols = json::array();
    for (const auto& c : s.basis) cols.push_back(int_vec_json(c));
    return json{{"ambient", s.ambient}, {"basis", cols}};
}

json scalar_json(const CycloLaurentScalar& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        json coeffs = json::array();
        for (const auto& q : c.coeffs()) coeffs.push_back(q.get_str());
        terms.push_back(json{{"e", int_vec_json(e)}, {"c", coeffs}});
    }
    return json{{"order", s.cyclo_order()}, {"rank", s.laurent_rank()}, {"terms", terms}};
}

CycloLaurentScalar scalar_parse(const json& j) {
    unsigned long order = j.at("order").get<unsigned long>();
    std::size_t rank = j.at("rank").get<std::size_t>();
    CycloLaurentScalar s = CycloLaurentScalar::zero(order, rank);
    for (const auto& t : j.at("terms")) {
        std::vector<Rat> coeffs;
        for (const auto& c : t.at("c")) coeffs.emplace_back(c.get<std::string>());
        for (Rat& c : coeffs) c.canonicalize();
        s = s + CycloLaurentScalar::monomial(order, int_vec_parse(t.at("e")),
                                             CyclotomicNumber(order, std::move(coeffs)));
    }
    return s;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw std::invalid_argument(what + ": unknown field \"" + it.key() + "\"");
    }
}

}  // namespace

std::string unit_group_to_json(const UnitGroupSpec& spec) { return unit_group_json(spec).dump(); }

UnitGroupRef unit_group_from_json(const std::string& text) {
    return unit_group_parse(json::parse(text));
}

std::string unit_value_to_json(const UnitValue& v) { return unit_value_json(v).dump(); }

QSpec qspec_from_json(const std::string& text) {
    json j = json::parse(text);
    reject_unknown(j, {"M", "N", "unit_group", "Q"}, "QSpec");
    QSpec q;
    q.M = j.at("M").get<std::size_t>();
    q.N = j.at("N").get<std::size_t>();
    q.spec = unit_group_parse(j.at("unit_group"));
    for (const auto& row : j.at("Q")) {
        q.Q.emplace_back();
        for (const auto& e : row) q.Q.back().push_back(unit_value_parse(e, q.spec));
    }
    q.validate();
    return q;
}

std::string qspec_to_json(const QSpec& q) {
    json rows = json::array();
    for (const auto& row : q.Q) {
        json r = json::array();
        for (const auto& v : row) r.push_back(unit_value_json(v));
        rows.push_back(r);
    }
    return json{{"M", q.M}, {"N", q.N}, {"unit_group", unit_group_json(*q.spec)}, {"Q", rows}}
        .dump();
}

QuotientDatum datum_from_json(const std::string& text) {
    json j = json::parse(text);
    reject_unknown(j, {"M", "N", "unit_group", "G", "N_basis", "Phi"}, "datum");
    QuotientDatum d;
    d.M = j.at("M").get<std::size_t>();
    d.N_order = j.at("N").get<std::size_t>();
    d.value_spec = unit_group_parse(j.at("unit_group"));
    for (const auto& g : j.at("G")) d.G.push_back(g.get<std::size_t>());
    std::sort(d.G.begin(), d.G.end());
    std::size_t rank = (d.M - 1) * (d.N_order - 1);
    std::vector<std::vector<Int>> cols;
    for (const auto& c : j.at("N_basis")) {
        cols.push_back(int_vec_parse(c));
        if (cols.back().size() != rank)
            throw std::invalid_argument("datum: N_basis column has wrong length");
    }
    IntMatrix given = IntMatrix::from_columns(rank, cols);
    d.N = hnf(given);
    if (d.N.rank() != cols.size())
        throw std::invalid_argument("datum: N_basis columns are not independent");
    const json& phi = j.at("Phi");
    std::vector<std::vector<UnitValue>> given_phi(cols.size());
    for (std::size_t b = 0; b < cols.size(); ++b) {
        const json& row = phi.at(std::to_string(b));
        for (auto g : d.G) {
            if (!row.contains(std::to_string(g)))
                throw std::invalid_argument("datum: Phi missing value at h^" + std::to_string(g));
            given_phi[b].push_back(unit_value_parse(row.at(std::to_string(g)), d.value_spec));
        }
    }
    // re-express Phi on the canonical HNF basis by multiplicativity
    d.phi.assign(d.N.rank(), {});
    for (std::size_t b = 0; b < d.N.rank(); ++b) {
        auto coords = solve_columns(given, d.N.basis[b]);
        if (!coords) throw std::invalid_argument("datum: basis change failed");
        for (std::size_t k = 0; k < d.G.size(); ++k) {
            UnitValue v = UnitValue::one(d.value_spec);
            for (std::size_t t = 0; t < cols.size(); ++t) v = v * given_phi[t][k].pow((*coords)[t]);
            d.phi[b].push_back(std::move(v));
        }
    }
    return d;
}

std::string datum_to_json(const QuotientDatum& d) {
    json cols = json::array();
    for (const auto& c : d.N.basis) cols.push_back(int_vec_json(c));
    json phi = json::object();
    for (std::size_t b = 0; b < d.phi.size(); ++b) {
        json row = json::object();
        for (std::size_t k = 0; k < d.G.size(); ++k)
            row[std::to_string(d.G[k])] = unit_value_json(d.phi[b][k]);
        phi[std::to_string(b)] = row;
    }
    return json{{"M", d.M},
                {"N", d.N_order},
                {"unit_group", unit_group_json(*d.value_spec)},
                {"G", d.G},
                {"N_basis", cols},
                {"Phi", phi}}
        .dump();
}

std::string group_table_to_json(const FiniteGroupTable& g) {
    json rows = json::array();
    for (std::size_t a = 0; a < g.order(); ++a) {
        json r = json::array();
        for (std::size_t b = 0; b < g.order(); ++b) r.push_back(g.mul(a, b));
        rows.push_back(r);
    }
    return json{{"order", g.order()}, {"mult", rows}, {"identity", g.identity()}}.dump();
}

FiniteGroupTable group_table_from_json(const std::string& text) {
    json j = json::parse(text);
    reject_unknown(j, {"order", "mult", "identity"}, "group table");
    std::size_t n = j.at("order").get<std::size_t>();
    std::vector<std::uint32_t> mult;
    for (const auto& row : j.at("mult"))
        for (const auto& e : row) mult.push_back(e.get<std::uint32_t>());
    return FiniteGroupTable(n, std::move(mult), j.at("identity").get<std::size_t>());
}

std::string hopf_to_json(const HopfSC& A) {
    json j;
    j["dim"] = A.dim();
    j["cyclo_order"] = A.cyclo_order();
    j["laurent_rank"] = A.laurent_rank();
    json labels = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i) labels.push_back(A.label(i));
    j["labels"] = labels;

    json mult = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t k = 0; k < A.dim(); ++k) {
            auto pr = A.mult_basis(i, k);
            if (!pr.empty())
                mult.push_back(json{{"i", i}, {"j", k}, {"out", pr[0].first},
                                    {"scalar", scalar_json(pr[0].second)}});
        }
    j["mult"] = mult;

    json comult = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (const auto& t : A.comult(i))
            comult.push_back(json{{"i", i}, {"left", t.left}, {"right", t.right},
                                  {"scalar", scalar_json(A.pooled(t.scalar))}});
    j["comult"] = comult;

    json counit = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i) counit.push_back(scalar_json(A.counit(i)));
    j["counit"] = counit;

    json antipode = json::array();
    for (std::size_t i = 0; i < A.dim(); ++i) {
        auto s = A.antipode_basis(i);
        if (!s.empty())
            antipode.push_back(
                json{{"i", i}, {"out", s[0].first}, {"scalar", scalar_json(s[0].second)}});
    }
    j["antipode"] = antipode;

    json unit = json::array();
    for (const auto& [i, s] : A.unit()) unit.push_back(json{{"i", i}, {"scalar", scalar_json(s)}});
    j["unit"] = unit;
    return j.dump();
}

HopfSC hopf_from_json(const std::string& text) {
    json j = json::parse(text);
    reject_unknown(j, {"dim", "cyclo_order", "laurent_rank", "labels", "mult", "comult", "counit",
                       "antipode", "unit"},
                   "hopf");
    std::size_t d = j.at("dim").get<std::size_t>();
    HopfSC A(d, j.at("cyclo_order").get<unsigned long>(), j.at("laurent_rank").get<std::size_t>());
    const auto& labels = j.at("labels");
    for (std::size_t i = 0; i < d; ++i) A.set_label(i, labels.at(i).get<std::string>());
    for (const auto& t : j.at("mult")) {
        std::size_t i = t.at("i").get<std::size_t>(), k = t.at("j").get<std::size_t>();
        A.set_mult(i, k, t.at("out").get<std::uint32_t>(),
                   A.pool_id(scalar_parse(t.at("scalar"))));
    }
    for (const auto& t : j.at("comult"))
        A.add_comult_term(t.at("i").get<std::size_t>(), t.at("left").get<std::uint32_t>(),
                          t.at("right").get<std::uint32_t>(),
                          A.pool_id(scalar_parse(t.at("scalar"))));
    const auto& counit = j.at("counit");
    for (std::size_t i = 0; i < d; ++i) A.set_counit(i, A.pool_id(scalar_parse(counit.at(i))));
    for (const auto& t : j.at("antipode"))
        A.set_antipode(t.at("i").get<std::size_t>(), t.at("out").get<std::uint32_t>(),
                       A.pool_id(scalar_parse(t.at("scalar"))));
    for (const auto& t : j.at("unit"))
        A.add_unit_term(t.at("i").get<std::size_t>(), A.pool_id(scalar_parse(t.at("scalar"))));
    A.finalize();
    return A;
}

std::string hopf_image_result_to_json(const HopfImageResult& r) {
    json j;
    j["M"] = r.q.M;
    j["N"] = r.q.N;
    json theta = json::array();
    for (const auto& row : r.theta.theta) {
        json tr = json::array();
        for (const auto& v : row) tr.push_back(unit_value_json(v));
        theta.push_back(tr);
    }
    j["theta"] = theta;
    json levels = json::array();
    for (const auto& l : r.eq.per_level) levels.push_back(subgroup_json(l));
    j["EQ_levels"] = levels;
    j["EQ"] = subgroup_json(r.eq.EQ);
    j["IQ0"] = json{{"factors", int_vec_json(r.eq.IQ0.invariant_factors)},
                    {"free_rank", r.eq.IQ0.free_rank}};
    j["NQ"] = subgroup_json(r.NQ);
    j["U"] = subgroup_json(r.U);
    json phi = json::object();
    for (std::size_t b = 0; b < r.datum.phi.size(); ++b) {
        json row = json::object();
        for (std::size_t k = 0; k < r.datum.G.size(); ++k)
            row[std::to_string(r.datum.G[k])] = unit_value_json(r.datum.phi[b][k]);
        phi[std::to_string(b)] = row;
    }
    j["Phi"] = phi;
    j["quotient"] = json{{"factors", int_vec_json(r.quotient.invariant_factors)},
                         {"free_rank", r.quotient.free_rank}};
    if (!r.dimension)
        j["dimension"] = "infinite";
    else if (r.dimension->fits_slong_p())
        j["dimension"] = r.dimension->get_si();
    else
        j["dimension"] = r.dimension->get_str();
    j["inner_faithful"] = r.inner_faithful;
    j["classification"] = r.classification.str();
    json certs = json::object();
    for (const auto& c : r.certificates)
        certs[c.name] = c.applicable ? json(c.verdict) : json("not_applicable");
    j["certificates"] = certs;
    if (r.factorization_checked) j["factorization_ok"] = r.factorization_ok;
    j["consistent"] = r.consistency_failures.empty();
    if (!r.consistency_failures.empty()) j["consistency_failures"] = r.consistency_failures;
    return j.dump(2);
}

}  // namespace smashquot
