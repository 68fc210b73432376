#include "ramsey/records.hpp"

#include <sstream>

#include <json.hpp>

#include "ramsey/constructions.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/lower_bounds.hpp"

namespace ramsey {

using nlohmann::json;

std::string result_record_json(const std::string& pattern_g6, int r, const RamseyResult& result) {
    json j;
    j["kind"] = "ramsey-result";
    j["version"] = 1;
    j["pattern"] = pattern_g6;
    j["r"] = r;
    j["lo"] = result.lo;
    j["hi"] = result.hi ? json(*result.hi) : json(nullptr);
    j["exact"] = result.exact();
    j["certificate"] = to_string(result.upper_certificate);
    j["bound_name"] = result.bound_name.empty() ? json(nullptr) : json(result.bound_name);
    j["nodes"] = result.nodes;
    j["seconds"] = result.seconds;
    j["witness"] = result.witness ? json(write_colouring(*result.witness)) : json(nullptr);
    return j.dump();
}

namespace {

json embedding_to_json(const Embedding& e) { return json(e.map); }

json failure_to_json(const StepFailure& f) {
    json j;
    j["type"] = "failure";
    j["kind"] = to_string(f.kind);
    j["detail"] = f.detail;
    j["path"] = f.path;
    j["path_colour"] = f.path_colour;
    j["mono_witness"] = f.mono_witness ? embedding_to_json(*f.mono_witness) : json(nullptr);
    j["mono_witness_colour"] = f.mono_witness_colour;
    j["tiles"] = f.tiles;
    j["tiles_colour"] = f.tiles_colour;
    if (f.clique_path) {
        json cp;
        cp["cliques"] = f.clique_path->cliques;
        json links = json::array();
        for (auto [x, y] : f.clique_path->links) links.push_back({x, y});
        cp["links"] = links;
        j["clique_path"] = cp;
    } else {
        j["clique_path"] = nullptr;
    }
    return j;
}

StepFailure failure_from_json(const json& j) {
    StepFailure f{StepKind::mono_path_too_short, ""};
    auto kind = step_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw std::runtime_error("unknown failure kind");
    f.kind = *kind;
    f.detail = j.value("detail", "");
    f.path = j.value("path", std::vector<int>{});
    f.path_colour = j.value("path_colour", -1);
    if (!j.at("mono_witness").is_null())
        f.mono_witness = Embedding{j.at("mono_witness").get<std::vector<int>>()};
    f.mono_witness_colour = j.value("mono_witness_colour", -1);
    f.tiles = j.value("tiles", std::vector<std::vector<int>>{});
    f.tiles_colour = j.value("tiles_colour", -1);
    if (j.contains("clique_path") && !j.at("clique_path").is_null()) {
        CliquePath cp;
        cp.cliques = j.at("clique_path").at("cliques").get<std::vector<std::vector<int>>>();
        for (const auto& l : j.at("clique_path").at("links"))
            cp.links.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
        f.clique_path = std::move(cp);
    }
    return f;
}

Graph target_graph(int case_kind, int t, int n) {
    return case_kind == 1 ? biclique_path_graph(t, n) : clique_path_graph(t, n);
}

}  // namespace

std::string trace_to_json(const ExtractionTrace& trace, const EdgeColouring& host,
                          const ExtractOutcome& outcome) {
    json j;
    j["kind"] = "extraction-trace";
    j["version"] = 1;
    j["case"] = trace.case_kind;
    j["t"] = trace.t;
    j["n"] = trace.n;
    j["colouring"] = write_colouring(host);
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json st;
        st["name"] = s.name;
        st["colour"] = s.colour;
        st["vertices"] = s.vertices;
        st["sets"] = s.sets;
        st["embedding"] = s.embedding ? embedding_to_json(*s.embedding) : json(nullptr);
        steps.push_back(std::move(st));
    }
    j["steps"] = steps;
    if (const auto* e = std::get_if<MonoEmbedding>(&outcome)) {
        json oc;
        oc["type"] = "embedding";
        oc["colour"] = e->colour;
        oc["target"] = write_graph6(target_graph(trace.case_kind, trace.t, trace.n));
        oc["map"] = e->embedding.map;
        j["outcome"] = oc;
    } else {
        j["outcome"] = failure_to_json(std::get<StepFailure>(outcome));
    }
    return j.dump(2) + "\n";
}

namespace {

VerifyStatus fail(std::string* message, VerifyStatus st, const std::string& why) {
    if (message) *message = why;
    return st;
}

VerifyStatus verify_trace_json(const json& j, std::string* message) {
    int case_kind = j.at("case").get<int>();
    int t = j.at("t").get<int>();
    int n = j.at("n").get<int>();
    EdgeColouring host = parse_colouring(j.at("colouring").get<std::string>());
    const json& oc = j.at("outcome");
    std::string type = oc.at("type").get<std::string>();
    if (type == "embedding") {
        Graph target = target_graph(case_kind, t, n);
        if (oc.at("target").get<std::string>() != write_graph6(target))
            return fail(message, VerifyStatus::invalid, "trace target mismatch");
        Embedding e{oc.at("map").get<std::vector<int>>()};
        int colour = oc.at("colour").get<int>();
        if (colour < 0 || colour >= host.colours())
            return fail(message, VerifyStatus::invalid, "trace colour out of range");
        if (!is_valid_embedding(host.colour_class(colour), target, e))
            return fail(message, VerifyStatus::invalid,
                        "embedding does not carry the target into the stated colour class");
        return fail(message, VerifyStatus::valid, "monochromatic embedding verified");
    }
    if (type == "failure") {
        StepFailure f = failure_from_json(oc);
        if (!verify_step_failure(host, f, t, n, case_kind))
            return fail(message, VerifyStatus::invalid, "failure certificate does not verify");
        return fail(message, VerifyStatus::valid,
                    "failure certificate " + to_string(f.kind) + " verified");
    }
    return fail(message, VerifyStatus::parse_error, "unknown trace outcome type");
}

VerifyStatus verify_result_json(const json& j, std::string* message) {
    Graph pattern = parse_graph6(j.at("pattern").get<std::string>());
    int lo = j.at("lo").get<int>();
    if (!j.at("hi").is_null() && j.at("hi").get<int>() < lo)
        return fail(message, VerifyStatus::invalid, "interval with hi < lo");
    if (j.at("witness").is_null())
        return fail(message, VerifyStatus::valid, "no witness attached; nothing to refute");
    EdgeColouring w = parse_colouring(j.at("witness").get<std::string>());
    if (w.order() != lo - 1)
        return fail(message, VerifyStatus::invalid, "witness order is not lo - 1");
    if (!verify_no_mono(w, pattern))
        return fail(message, VerifyStatus::invalid, "witness contains a monochromatic copy");
    return fail(message, VerifyStatus::valid, "witness verified pattern-free");
}

std::optional<std::string> pattern_from_header(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] != '#') break;
        auto pos = line.find("pattern=");
        if (pos != std::string::npos) {
            std::string tok = line.substr(pos + 8);
            auto end = tok.find_first_of(" \t\r");
            return tok.substr(0, end);
        }
    }
    return std::nullopt;
}

}  // namespace

VerifyStatus verify_artifact(const std::string& text,
                             const std::optional<std::string>& pattern_g6,
                             std::string* message) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        return fail(message, VerifyStatus::parse_error, "empty artifact");

    if (text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const std::exception& e) {
            return fail(message, VerifyStatus::parse_error, e.what());
        }
        try {
            std::string kind = j.at("kind").get<std::string>();
            if (kind == "extraction-trace") return verify_trace_json(j, message);
            if (kind == "ramsey-result") return verify_result_json(j, message);
            return fail(message, VerifyStatus::parse_error, "unknown record kind " + kind);
        } catch (const Graph6Error& e) {
            return fail(message, VerifyStatus::parse_error, e.what());
        } catch (const ColouringFormatError& e) {
            return fail(message, VerifyStatus::parse_error, e.what());
        } catch (const json::exception& e) {
            return fail(message, VerifyStatus::parse_error, e.what());
        }
    }

    // Plain colouring text; the excluded pattern comes from the header
    // comment or the caller.
    std::optional<std::string> pg6 = pattern_g6 ? pattern_g6 : pattern_from_header(text);
    if (!pg6)
        return fail(message, VerifyStatus::parse_error,
                    "colouring artifact without a pattern to exclude");
    try {
        Graph pattern = parse_graph6(*pg6);
        EdgeColouring c = parse_colouring(text);
        if (!verify_no_mono(c, pattern))
            return fail(message, VerifyStatus::invalid,
                        "colouring contains a monochromatic copy of " + *pg6);
        return fail(message, VerifyStatus::valid, "colouring verified " + *pg6 + "-free");
    } catch (const Graph6Error& e) {
        return fail(message, VerifyStatus::parse_error, e.what());
    } catch (const ColouringFormatError& e) {
        return fail(message, VerifyStatus::parse_error, e.what());
    }
}

}  // namespace ramsey
