#include "fermatkit/dataio.hpp"

#include <fstream>

namespace fk {

namespace {

Int int_from_json(const json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(v.get<long long>());
    fail_input("expected an integer or integer string");
}

std::vector<Rat> rat_row(const json& row) {
    std::vector<Rat> out;
    for (const auto& v : row) {
        if (v.is_string())
            out.push_back(rat_from_string(v.get<std::string>()));
        else if (v.is_number_integer())
            out.push_back(Rat(Int(v.get<long long>())));
        else
            fail_input("expected a rational string");
    }
    return out;
}

json rat_row_json(const std::vector<Rat>& row) {
    json out = json::array();
    for (const auto& v : row) out.push_back(rat_to_string(v));
    return out;
}

IntPoly poly_from_json(const json& arr) {
    std::vector<Int> c;
    for (const auto& v : arr) c.push_back(int_from_json(v));
    return IntPoly(std::move(c));
}

json poly_to_json(const IntPoly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

}  // namespace

NumberFieldData parse_field_descriptor(const json& doc) {
    NumberFieldData d;
    try {
        d.label = doc.at("label").get<std::string>();
        d.min_poly = poly_from_json(doc.at("min_poly"));
        for (const auto& row : doc.at("integral_basis"))
            d.integral_basis.push_back(rat_row(row));
        d.disc = int_from_json(doc.at("disc"));
        if (doc.contains("h_K") && !doc.at("h_K").is_null())
            d.h_K = int_from_json(doc.at("h_K"));
        for (const auto& row : doc.at("fundamental_units"))
            d.fundamental_units.push_back(rat_row(row));
        if (doc.contains("torsion_units"))
            for (const auto& row : doc.at("torsion_units"))
                d.torsion_units.push_back(rat_row(row));
        if (doc.contains("rk_units"))
            for (const auto& row : doc.at("rk_units")) d.rk_units.push_back(rat_row(row));
        if (doc.contains("notes")) d.notes = doc.at("notes").get<std::string>();
        if (doc.contains("prime_overrides"))
            for (const auto& ov : doc.at("prime_overrides")) {
                Int p = int_from_json(ov.at("p"));
                std::vector<std::pair<int, int>> ideals;
                for (const auto& id : ov.at("ideals"))
                    ideals.emplace_back(id.at("e").get<int>(), id.at("f").get<int>());
                d.prime_overrides[p] = std::move(ideals);
            }
    } catch (const json::exception& e) {
        fail_input(std::string("malformed field descriptor: ") + e.what());
    }
    return d;
}

json serialize_field_descriptor(const NumberFieldData& d) {
    json doc;
    doc["label"] = d.label;
    doc["min_poly"] = poly_to_json(d.min_poly);
    json basis = json::array();
    for (const auto& row : d.integral_basis) basis.push_back(rat_row_json(row));
    doc["integral_basis"] = basis;
    doc["disc"] = d.disc.get_str();
    if (d.h_K)
        doc["h_K"] = d.h_K->get_str();
    else
        doc["h_K"] = nullptr;
    json units = json::array();
    for (const auto& row : d.fundamental_units) units.push_back(rat_row_json(row));
    doc["fundamental_units"] = units;
    json tors = json::array();
    for (const auto& row : d.torsion_units) tors.push_back(rat_row_json(row));
    doc["torsion_units"] = tors;
    json rk = json::array();
    for (const auto& row : d.rk_units) rk.push_back(rat_row_json(row));
    doc["rk_units"] = rk;
    doc["notes"] = d.notes;
    if (!d.prime_overrides.empty()) {
        json ovs = json::array();
        for (const auto& [p, ideals] : d.prime_overrides) {
            json ov;
            ov["p"] = p.get_str();
            json ids = json::array();
            for (auto [e, f] : ideals) ids.push_back(json{{"e", e}, {"f", f}});
            ov["ideals"] = ids;
            ovs.push_back(ov);
        }
        doc["prime_overrides"] = ovs;
    }
    return doc;
}

std::vector<NewformRecord> parse_newform_table(const json& doc) {
    std::vector<NewformRecord> out;
    std::string field_label;
    Int level_norm(2);
    try {
        field_label = doc.at("field_label").get<std::string>();
        if (doc.contains("level_norm")) level_norm = int_from_json(doc.at("level_norm"));
        for (const auto& f : doc.at("forms")) {
            NewformRecord rec;
            rec.field_label = field_label;
            rec.level_norm = level_norm;
            rec.label = f.at("label").get<std::string>();
            if (f.contains("hecke_poly")) {
                HeckeField H;
                H.min_poly = poly_from_json(f.at("hecke_poly"));
                if (!H.min_poly.is_monic())
                    fail_input(rec.label + ": Hecke polynomial must be monic");
                rec.hecke = H;
                rec.hecke_degree = H.degree();
            } else if (f.contains("hecke_degree")) {
                rec.hecke_degree = f.at("hecke_degree").get<int>();
            } else {
                fail_input(rec.label + ": record needs hecke_poly or hecke_degree");
            }
            rec.orbit_size =
                f.contains("orbit_size") ? f.at("orbit_size").get<int>() : rec.hecke_degree;
            if (f.contains("eigenvalues"))
                for (const auto& ev : f.at("eigenvalues")) {
                    EigenvalueKey key;
                    key.p = int_from_json(ev.at("p"));
                    key.f = ev.contains("f") ? ev.at("f").get<int>() : 1;
                    key.factor_index =
                        ev.contains("factor_index") ? ev.at("factor_index").get<int>() : 0;
                    HeckeElem aq = rat_row(ev.at("aq"));
                    if (!rec.hecke)
                        fail_input(rec.label + ": eigenvalues need a Hecke polynomial");
                    if (aq.size() != static_cast<size_t>(rec.hecke_degree))
                        fail_input(rec.label + ": eigenvalue has wrong coordinate length");
                    rec.eigenvalues.emplace_back(key, std::move(aq));
                }
            if (f.contains("notes")) rec.notes = f.at("notes").get<std::string>();
            verify_weil_bounds(rec);
            out.push_back(std::move(rec));
        }
    } catch (const json::exception& e) {
        fail_input(std::string("malformed newform table: ") + e.what());
    }
    return out;
}

json serialize_newform_table(const std::string& field_label,
                             const std::vector<NewformRecord>& forms) {
    json doc;
    doc["field_label"] = field_label;
    doc["level_norm"] = 2;
    doc["schema_version"] = "fixture-1";
    json arr = json::array();
    for (const auto& f : forms) {
        json rec;
        rec["label"] = f.label;
        if (f.hecke) rec["hecke_poly"] = poly_to_json(f.hecke->min_poly);
        rec["hecke_degree"] = f.hecke_degree;
        rec["orbit_size"] = f.orbit_size;
        json evs = json::array();
        for (const auto& [key, aq] : f.eigenvalues) {
            json ev;
            ev["p"] = key.p.get_str();
            ev["f"] = key.f;
            ev["factor_index"] = key.factor_index;
            ev["aq"] = rat_row_json(aq);
            evs.push_back(ev);
        }
        rec["eigenvalues"] = evs;
        if (!f.notes.empty()) rec["notes"] = f.notes;
        arr.push_back(rec);
    }
    doc["forms"] = arr;
    return doc;
}

// ---------------------------------------------------------------------------
// fixture store
// ---------------------------------------------------------------------------

FixtureStore::FixtureStore(std::filesystem::path root) : root_(std::move(root)) {
    if (!std::filesystem::is_directory(root_))
        fail_data("fixture root " + root_.string() + " does not exist");
}

std::filesystem::path FixtureStore::default_root() {
    if (const char* env = std::getenv("FERMATKIT_DATA")) return env;
    return "data";
}

std::shared_ptr<const NumberField> FixtureStore::load_field(const std::string& label) {
    auto it = cache_.find(label);
    if (it != cache_.end()) return it->second;
    auto path = root_ / "fields" / (label + ".json");
    std::ifstream in(path);
    if (!in) fail_data("no field descriptor for " + label + " at " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail_input(path.string() + ": " + e.what());
    }
    auto field = std::make_shared<NumberField>(parse_field_descriptor(doc));
    cache_[label] = field;
    return field;
}

bool FixtureStore::has_newform_table(const std::string& label) const {
    return std::filesystem::exists(root_ / "newforms" / (label + ".json"));
}

std::vector<NewformRecord> FixtureStore::newforms(const std::string& label) {
    auto path = root_ / "newforms" / (label + ".json");
    std::ifstream in(path);
    if (!in) fail_data("no newform table for " + label + " at " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail_input(path.string() + ": " + e.what());
    }
    return parse_newform_table(doc);
}

std::vector<std::string> FixtureStore::field_labels() const {
    std::vector<std::string> out;
    for (const auto& entry : std::filesystem::directory_iterator(root_ / "fields"))
        if (entry.path().extension() == ".json") out.push_back(entry.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// report serialization
// ---------------------------------------------------------------------------

json to_json(const FieldElement& x) {
    json out = json::array();
    for (const auto& c : x.coords) out.push_back(rat_to_string(c));
    return out;
}

json to_json(const RkCertificate& cert) {
    json out;
    out["conclusive"] = cert.conclusive;
    out["R_multiple"] = cert.R_multiple.get_str();
    json units = json::array();
    for (const auto& u : cert.units) {
        json ju;
        ju["coords"] = to_json(u.u);
        ju["tower_poly"] = json::array();
        for (const auto& c : u.H.coeffs()) ju["tower_poly"].push_back(c.get_str());
        ju["degree"] = u.t;
        units.push_back(ju);
    }
    out["units"] = units;
    json levels = json::array();
    for (const auto& lvl : cert.levels) {
        json jl;
        jl["n"] = lvl.n;
        jl["degree"] = lvl.degree.get_str();
        jl["A_n"] = lvl.A_n.get_str();
        jl["conclusive"] = lvl.conclusive;
        json vals = json::array();
        for (size_t i = 0; i < lvl.values.size(); ++i)
            vals.push_back(json{{"value", lvl.values[i].get_str()},
                                {"path", lvl.path[i]}});
        jl["values"] = vals;
        levels.push_back(jl);
    }
    out["levels"] = levels;
    return out;
}

json to_json(const SignMapReport& rep) {
    json out;
    out["rank"] = rep.rank;
    out["h_plus"] = rep.h_plus.get_str();
    out["sign_vectors"] = rep.sign_vectors;
    return out;
}

json to_json(const RayClassReport& rep) {
    json out;
    out["modulus"] = rep.modulus;
    out["all_infinite_places"] = rep.all_infinite_places;
    out["group_order"] = rep.group_order.get_str();
    out["image_order"] = rep.image_order.get_str();
    out["ray_class_number"] = rep.ray_class_number.get_str();
    return out;
}

json to_json(const Theorem17Verdict& v) {
    json out;
    out["two_totally_ramified"] = v.two_totally_ramified;
    out["h_plus"] = v.h_plus.get_str();
    out["h_plus_is_one"] = v.h_plus_is_one;
    out["h_K_is_one"] = v.h_K_is_one;
    out["units_surject_mod4"] = v.units_surject_mod4;
    out["units_span_mod4_squares"] = v.units_span_mod4_squares;
    out["K_equals_ray_class_field_mod4"] = v.K_equals_ray_class_field_mod4;
    out["corollary_consistent"] = v.corollary_consistent;
    return out;
}

json to_json(const ConditionCReport& rep) {
    json out;
    out["total_forms"] = rep.total_forms;
    out["rational_forms"] = rep.rational_forms;
    out["satisfied"] = rep.satisfied;
    out["vacuous"] = rep.vacuous;
    json scans = json::array();
    for (const auto& s : rep.scans) {
        json js;
        js["label"] = s.label;
        js["status"] = s.status == FormStatus::witness_found ? "witness_found"
                       : s.status == FormStatus::nonrational ? "nonrational"
                                                             : "inconclusive";
        if (s.witness) {
            js["witness_p"] = s.witness->p.get_str();
            js["witness_f"] = s.witness->f;
            js["witness_aq"] = s.witness_aq->get_str();
        }
        scans.push_back(js);
    }
    out["forms"] = scans;
    return out;
}

json to_json(const ObstructionReport& rep) {
    json out;
    out["form"] = rep.form_label;
    out["p"] = rep.q.p.get_str();
    out["f"] = rep.q.f;
    out["norm_q"] = rep.q.norm().get_str();
    json aq = json::array();
    for (const auto& t : rep.A_q) aq.push_back(t.get_str());
    out["A_q"] = aq;
    json b = json::array();
    for (const auto& c : rep.B) b.push_back(rat_to_string(c));
    out["B"] = b;
    out["norm_B"] = rep.norm_B.get_str();
    out["B_is_zero"] = rep.B_is_zero;
    json sp = json::array();
    for (const auto& p : rep.survivor_primes) sp.push_back(p.get_str());
    out["survivor_primes"] = sp;
    return out;
}

json to_json(const SurvivorReport& rep) {
    json out;
    out["form"] = rep.form_label;
    out["method_failed"] = rep.method_failed;
    json per = json::array();
    for (const auto& ob : rep.per_prime) per.push_back(to_json(ob));
    out["per_prime"] = per;
    json sv = json::array();
    for (const auto& p : rep.survivors) sv.push_back(p.get_str());
    out["survivors"] = sv;
    return out;
}

json to_json(const FsWitness& w) {
    json out;
    out["a"] = to_json(w.a);
    out["b"] = to_json(w.b);
    out["in_S"] = w.in_S;
    out["v_L_a"] = w.v_L_a;
    out["threshold_4d"] = w.threshold;
    out["fs_violated"] = w.fs_violated;
    if (w.fs_violated) {
        out["used_inverse_transform"] = w.used_inverse_transform;
        out["v_c4_W"] = w.v_c4_w;
        out["v_delta_W"] = w.v_delta_w;
        out["conductor_is_L"] = w.conductor_is_L;
    }
    return out;
}

json to_json(const NormalizedSolution& n) {
    json out;
    out["a"] = to_json(n.a);
    out["b"] = to_json(n.b);
    out["c"] = to_json(n.c);
    out["eps"] = to_json(n.eps);
    out["permutation"] = n.permutation;
    out["v_abc"] = n.v_abc;
    out["v_c4_W"] = n.v_c4_w;
    out["v_delta_W"] = n.v_delta_w;
    out["w_model_integral"] = n.w_model_integral;
    out["multiplicative_at_L"] = n.multiplicative_at_L;
    return out;
}

json to_json(const ValuationChainReport& rep) {
    json out;
    out["eps"] = to_json(rep.eps);
    out["valuations"] = {rep.v_c4, rep.v_c6, rep.v_delta};
    out["valuations_W"] = {rep.v_c4_w, rep.v_c6_w, rep.v_delta_w};
    out["w_model_integral"] = rep.w_model_integral;
    out["annotations"] = rep.annotations;
    out["conductor_exponent_set"] = rep.conductor_exponent_set;
    return out;
}

json to_json(const PowerResiduePairs& pr) {
    json out;
    json res = json::array();
    for (const auto& r : pr.residues) res.push_back(r.get_str());
    out["residues"] = res;
    json pairs = json::array();
    for (const auto& [s, t] : pr.pairs)
        pairs.push_back(json::array({s.get_str(), t.get_str()}));
    out["pairs"] = pairs;
    return out;
}

json to_json(const std::vector<PrimeIdealData>& qs) {
    json out = json::array();
    for (const auto& q : qs) {
        json jq;
        jq["p"] = q.p.get_str();
        jq["e"] = q.e;
        jq["f"] = q.f;
        jq["norm"] = q.norm.get_str();
        jq["external"] = q.external;
        if (q.gen_poly) {
            json g = json::array();
            for (const auto& c : q.gen_poly->coeffs()) g.push_back(c.get_str());
            jq["gen_poly"] = g;
        }
        out.push_back(jq);
    }
    return out;
}

}  // namespace fk
