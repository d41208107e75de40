#include "hrns/record.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace hrns {

using ordered_json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "plain") return OutputFormat::Plain;
    return std::nullopt;
}

std::string OutputRecord::order_string(bool csv) const {
    if (betti > 0) return csv ? "inf" : "infinite";
    return order.str();
}

namespace {

OutputRecord base_record(const HParams& p) {
    OutputRecord rec;
    rec.r = p.r;
    rec.n = p.n;
    rec.s = p.s;
    AbelianGroup g = abelianization(h_word(p));
    rec.betti = g.betti;
    rec.order = g.order();
    rec.invariant_factors = std::move(g.invariant_factors);
    return rec;
}

} // namespace

OutputRecord make_ab_record(const HParams& p) {
    return base_record(p);
}

OutputRecord make_classify_record(const HParams& p) {
    OutputRecord rec = base_record(p);
    rec.classification = h_classify(p);
    rec.bounds = d_lower_bound(p);
    return rec;
}

std::string csv_header() {
    return "r,n,s,betti,invariant_factors,order,verdict,reason,witness";
}

std::string to_csv_row(const OutputRecord& rec) {
    std::ostringstream os;
    os << rec.r << ',' << rec.n << ',' << rec.s << ',' << rec.betti << ',';
    for (std::size_t i = 0; i < rec.invariant_factors.size(); ++i) {
        if (i) os << ';';
        os << rec.invariant_factors[i].str();
    }
    os << ',' << rec.order_string(/*csv=*/true) << ',';
    if (rec.classification) {
        const Classification& c = *rec.classification;
        os << to_string(c.verdict) << ',' << to_string(c.reason) << ',';
        if (c.half_params)
            os << "half=(" << c.half_params->r << ';' << c.half_params->n << ';'
               << c.half_params->s << ')';
        else
            os << c.witness;
    } else {
        os << ",,";
    }
    return os.str();
}

namespace {

ordered_json classification_json(const Classification& c) {
    ordered_json j;
    j["verdict"] = to_string(c.verdict);
    if (c.reason != LogObstruction::None) j["reason"] = to_string(c.reason);
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (c.torus) {
        j["torus"] = ordered_json{{"r", c.torus->r},
                                  {"n", c.torus->n},
                                  {"presentation", c.torus->presentation()}};
    }
    if (c.half_params) {
        j["half_params"] = ordered_json{
            {"r", c.half_params->r}, {"n", c.half_params->n}, {"s", c.half_params->s}};
    }
    return j;
}

ordered_json record_json(const OutputRecord& rec) {
    ordered_json j;
    j["r"] = rec.r;
    j["n"] = rec.n;
    j["s"] = rec.s;
    j["betti"] = rec.betti;
    ordered_json factors = ordered_json::array();
    for (const Int& d : rec.invariant_factors) factors.push_back(d.str());
    j["invariant_factors"] = std::move(factors);
    j["order"] = rec.order_string();
    if (rec.classification) j["classification"] = classification_json(*rec.classification);
    if (rec.bounds) {
        j["bounds"] = ordered_json{{"kappa", rec.bounds->kappa},
                                   {"easy", rec.bounds->easy_bound},
                                   {"hard", rec.bounds->hard_bound},
                                   {"combined", rec.bounds->combined}};
    }
    return j;
}

LogVerdict verdict_from_string(const std::string& s) {
    for (LogVerdict v : {LogVerdict::ConfirmedLogTorusKnot, LogVerdict::ConfirmedLogInfiniteCyclic,
                         LogVerdict::NotConnectedLog, LogVerdict::CandidateCaseC})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown verdict: " + s);
}

LogObstruction obstruction_from_string(const std::string& s) {
    for (LogObstruction o :
         {LogObstruction::None, LogObstruction::BettiNe1, LogObstruction::DLowerBoundGt1,
          LogObstruction::ExcludedPair42, LogObstruction::GcdNRPlusSNe2,
          LogObstruction::HalfParamsNotPerfect})
        if (to_string(o) == s) return o;
    throw std::invalid_argument("unknown reason: " + s);
}

} // namespace

std::string to_json_string(const OutputRecord& rec) {
    return record_json(rec).dump();
}

OutputRecord record_from_json_string(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    OutputRecord rec;
    rec.r = j.at("r").get<long long>();
    rec.n = j.at("n").get<long long>();
    rec.s = j.at("s").get<long long>();
    rec.betti = j.at("betti").get<long>();
    for (const auto& d : j.at("invariant_factors"))
        rec.invariant_factors.emplace_back(d.get<std::string>());
    const std::string order = j.at("order").get<std::string>();
    rec.order = order == "infinite" ? Int(0) : Int(order);
    if (j.contains("classification")) {
        const auto& cj = j["classification"];
        Classification c;
        c.verdict = verdict_from_string(cj.at("verdict").get<std::string>());
        if (cj.contains("reason"))
            c.reason = obstruction_from_string(cj["reason"].get<std::string>());
        if (cj.contains("witness")) c.witness = cj["witness"].get<std::string>();
        if (cj.contains("torus"))
            c.torus = TorusKnotData{cj["torus"].at("r").get<long long>(),
                                    cj["torus"].at("n").get<long long>()};
        if (cj.contains("half_params"))
            c.half_params = HParams{cj["half_params"].at("r").get<long long>(),
                                    cj["half_params"].at("n").get<long long>(),
                                    cj["half_params"].at("s").get<long long>()};
        rec.classification = std::move(c);
    }
    if (j.contains("bounds")) {
        GeneratorBound b;
        b.kappa = j["bounds"].at("kappa").get<long long>();
        b.easy_bound = j["bounds"].at("easy").get<long long>();
        b.hard_bound = j["bounds"].at("hard").get<long long>();
        b.combined = j["bounds"].at("combined").get<long long>();
        rec.bounds = b;
    }
    return rec;
}

std::string to_plain(const OutputRecord& rec) {
    std::ostringstream os;
    os << "H(" << rec.r << "," << rec.n << "," << rec.s << ")^ab: betti " << rec.betti
       << ", invariant factors [";
    for (std::size_t i = 0; i < rec.invariant_factors.size(); ++i) {
        if (i) os << ", ";
        os << rec.invariant_factors[i].str();
    }
    os << "], order " << rec.order_string();
    if (rec.classification) {
        const Classification& c = *rec.classification;
        os << "\nclassification: " << to_string(c.verdict);
        if (c.reason != LogObstruction::None) os << " (" << to_string(c.reason) << ")";
        if (c.torus) os << ", torus (" << c.torus->r << "," << c.torus->n << "), presentation "
                        << c.torus->presentation();
        if (c.half_params)
            os << ", half triple H(" << c.half_params->r << "," << c.half_params->n << ","
               << c.half_params->s << ")";
        if (!c.witness.empty() && !c.torus) os << ", witness " << c.witness;
    }
    if (rec.bounds) {
        os << "\nd(ab) lower bounds: kappa " << rec.bounds->kappa << ", easy "
           << rec.bounds->easy_bound << ", hard " << rec.bounds->hard_bound << ", combined "
           << rec.bounds->combined;
    }
    return os.str();
}

std::string format_record(const OutputRecord& rec, OutputFormat f, bool with_csv_header) {
    switch (f) {
        case OutputFormat::Json: return to_json_string(rec);
        case OutputFormat::Csv:
            return with_csv_header ? csv_header() + "\n" + to_csv_row(rec) : to_csv_row(rec);
        case OutputFormat::Plain: return to_plain(rec);
    }
    throw std::logic_error("unknown format");
}

} // namespace hrns
