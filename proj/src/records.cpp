#include "monty/records.hpp"

#include <istream>

#include "json.hpp"

namespace monty {

namespace {

using json = nlohmann::ordered_json;

json int_list(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_string(x));
    return a;
}

std::vector<Int> parse_int_list(const json& a) {
    std::vector<Int> v;
    for (const auto& x : a) v.push_back(parse_int(x.get<std::string>()));
    return v;
}

json poly_json(const IntPoly& f) {
    json a = json::array();
    for (const Int& x : f.coeffs()) a.push_back(to_string(x));
    return a;
}

IntPoly parse_poly(const json& a) { return IntPoly(parse_int_list(a)); }

json gp_json(const GpRecord& r) {
    json j;
    j["type"] = "gp";
    j["n"] = to_string(r.gp.modulus);
    j["length"] = r.gp.length();
    j["c"] = int_list(r.gp.c);
    if (r.gp.ratio) j["ratio"] = to_string(*r.gp.ratio);
    if (r.params) {
        json p;
        p["a"] = to_string(r.params->a);
        p["k"] = to_string(r.params->k);
        p["p"] = to_string(r.params->p);
        p["m"] = to_string(r.params->m);
        j["params"] = p;
    }
    return j;
}

json pair_json(const PairRecord& r) {
    const PolyPair& p = r.pair;
    json j;
    j["type"] = "pair";
    j["n"] = to_string(p.modulus);
    j["d"] = p.f1.degree();
    j["f1"] = poly_json(p.f1);
    j["f2"] = poly_json(p.f2);
    j["r"] = to_string(p.root);
    j["skew"] = to_string(p.skew);
    j["resultant"] = to_string(p.resultant);
    j["delta_partial"] = to_string(p.delta_partial);
    j["delta_hat"] = to_string(p.delta_hat);
    j["delta_c"] = to_string(p.delta_c);
    j["norm1_sq"] = to_string(p.norm1_sq);
    j["norm2_sq"] = to_string(p.norm2_sq);
    j["sin2_theta"] = to_string(p.sin2);
    if (r.gp_c) j["c"] = int_list(*r.gp_c);
    return j;
}

Record parse_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "gp") {
        GpRecord r;
        r.gp.modulus = parse_int(j.at("n").get<std::string>());
        r.gp.c = parse_int_list(j.at("c"));
        if (j.contains("ratio")) r.gp.ratio = parse_int(j.at("ratio").get<std::string>());
        if (j.contains("params")) {
            const json& p = j.at("params");
            r.params = GpParams{parse_int(p.at("a").get<std::string>()),
                                parse_int(p.at("k").get<std::string>()),
                                parse_int(p.at("p").get<std::string>()),
                                parse_int(p.at("m").get<std::string>())};
        }
        if (j.contains("length") && j.at("length").get<std::size_t>() != r.gp.c.size())
            throw std::invalid_argument("gp record: length field disagrees with c");
        return r;
    }
    if (type == "pair") {
        PairRecord r;
        PolyPair& p = r.pair;
        p.modulus = parse_int(j.at("n").get<std::string>());
        p.f1 = parse_poly(j.at("f1"));
        p.f2 = parse_poly(j.at("f2"));
        p.root = parse_int(j.at("r").get<std::string>());
        p.skew = parse_rat(j.at("skew").get<std::string>());
        p.resultant = parse_int(j.at("resultant").get<std::string>());
        p.delta_partial = parse_int(j.at("delta_partial").get<std::string>());
        p.delta_hat = parse_int(j.at("delta_hat").get<std::string>());
        p.delta_c = parse_int(j.at("delta_c").get<std::string>());
        p.norm1_sq = parse_rat(j.at("norm1_sq").get<std::string>());
        p.norm2_sq = parse_rat(j.at("norm2_sq").get<std::string>());
        p.sin2 = parse_rat(j.at("sin2_theta").get<std::string>());
        if (j.contains("c")) r.gp_c = parse_int_list(j.at("c"));
        return r;
    }
    if (type == "factor") {
        return FactorRecord{FactorFound{parse_int(j.at("n").get<std::string>()),
                                        parse_int(j.at("factor").get<std::string>())}};
    }
    if (type == "degenerate") {
        DegenerateRecord r;
        r.modulus = parse_int(j.at("n").get<std::string>());
        r.reason = j.value("reason", "");
        if (j.contains("f1")) r.f1 = parse_poly(j.at("f1"));
        if (j.contains("f2")) r.f2 = parse_poly(j.at("f2"));
        return r;
    }
    throw std::invalid_argument("unknown record type '" + type + "'");
}

}  // namespace

std::string to_line(const Record& record) {
    json j = std::visit(
        [](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, GpRecord>) {
                return gp_json(r);
            } else if constexpr (std::is_same_v<T, PairRecord>) {
                return pair_json(r);
            } else if constexpr (std::is_same_v<T, FactorRecord>) {
                json f;
                f["type"] = "factor";
                f["n"] = to_string(r.outcome.modulus);
                f["factor"] = to_string(r.outcome.factor);
                return f;
            } else {
                json d;
                d["type"] = "degenerate";
                d["n"] = to_string(r.modulus);
                d["reason"] = r.reason;
                if (r.f1) d["f1"] = poly_json(*r.f1);
                if (r.f2) d["f2"] = poly_json(*r.f2);
                return d;
            }
        },
        record);
    return j.dump();
}

Record from_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("record parse: ") + e.what());
    }
    try {
        return parse_json(j);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("record fields: ") + e.what());
    }
}

std::vector<Record> read_records(std::istream& in) {
    std::vector<Record> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        try {
            out.push_back(from_line(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string report_line(const std::string& instance, const CheckResult& check) {
    json j;
    j["type"] = "report";
    j["instance"] = instance;
    j["check"] = check.name;
    switch (check.status) {
        case CheckStatus::pass: j["status"] = "pass"; break;
        case CheckStatus::fail: j["status"] = "fail"; break;
        case CheckStatus::skipped: j["status"] = "skipped"; break;
    }
    json w;
    for (const auto& [key, value] : check.witnesses) w[key] = value;
    j["witnesses"] = w;
    return j.dump();
}

std::string summary_line(const VerifyBatch& batch) {
    json j;
    j["type"] = "summary";
    j["pass"] = batch.passed;
    j["fail"] = batch.failed;
    j["skipped"] = batch.skipped;
    return j.dump();
}

}  // namespace monty
