#include "rpasched/io.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace rpasched {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

namespace {

class InstanceReader {
   public:
    InstanceReader(std::string_view text, std::string_view source) : text_(text), source_(source) {}

    Instance read() {
        json doc;
        try {
            doc = json::parse(text_.begin(), text_.end());
        } catch (const json::parse_error& e) {
            error(line_of_offset(text_, e.byte == 0 ? 0 : e.byte - 1), e.what());
        }
        if (!doc.is_object()) error(1, "top level must be an object");
        for (const auto& [key, value] : doc.items()) {
            if (key != "jobs" && key != "prec" && key != "chains" && key != "objective")
                error(locate("\"" + key + "\""), "unknown key '" + key + "'");
        }

        Instance inst;
        if (!doc.contains("jobs") || !doc["jobs"].is_array()) error(1, "missing array \"jobs\"");
        for (const auto& entry : doc["jobs"]) inst.jobs.push_back(read_job(entry));

        if (doc.contains("prec")) {
            if (!doc["prec"].is_array()) error(locate("\"prec\""), "\"prec\" must be an array");
            for (const auto& pair : doc["prec"]) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
                    error(locate("\"prec\""), "precedence entries must be [from, to] id pairs, got " + pair.dump());
                inst.prec_edges.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
            }
        }
        if (doc.contains("chains")) {
            if (!doc["chains"].is_array()) error(locate("\"chains\""), "\"chains\" must be an array");
            auto& chains = inst.declared_chains.emplace();
            for (const auto& chain : doc["chains"]) {
                if (!chain.is_array()) error(locate("\"chains\""), "each chain must be an array of ids");
                auto& ids = chains.emplace_back();
                for (const auto& id : chain) {
                    if (!id.is_string()) error(locate("\"chains\""), "chain entries must be strings, got " + id.dump());
                    ids.push_back(id.get<std::string>());
                }
            }
        }
        if (doc.contains("objective")) {
            const auto& obj = doc["objective"];
            if (obj == "cmax") {
                inst.objective = Objective::MinMakespan;
            } else if (obj == "feasible") {
                inst.objective = Objective::Feasibility;
            } else {
                error(locate("\"objective\""), "objective must be \"cmax\" or \"feasible\", got " + obj.dump());
            }
        }
        return inst;
    }

    [[noreturn]] void error(std::size_t line, const std::string& message) const {
        fail(ErrorCode::ParseError, std::string(source_) + ":" + std::to_string(line) + ": " + message);
    }

    std::size_t locate(const std::string& needle) const {
        const auto pos = text_.find(needle);
        return pos == std::string_view::npos ? 1 : line_of_offset(text_, pos);
    }

   private:
    Job read_job(const json& entry) const {
        if (!entry.is_object()) error(locate("\"jobs\""), "job entries must be objects, got " + entry.dump());
        if (!entry.contains("id") || !entry["id"].is_string()) error(locate("\"jobs\""), "job without string \"id\": " + entry.dump());
        Job job;
        job.id = entry["id"].get<std::string>();
        const std::size_t line = locate("\"" + job.id + "\"");
        auto number = [&](const char* key) -> Time {
            if (!entry.contains(key)) error(line, "job '" + job.id + "' lacks \"" + key + "\"");
            const auto& v = entry[key];
            if (!v.is_number_integer()) error(line, "job '" + job.id + "' field \"" + key + "\" must be an integer");
            return v.get<Time>();
        };
        job.release = number("r");
        job.processing = number("p");
        job.deadline = number("d");
        for (const auto& [key, value] : entry.items())
            if (key != "id" && key != "r" && key != "p" && key != "d") error(line, "job '" + job.id + "' has unknown key '" + key + "'");
        return job;
    }

    std::string_view text_;
    std::string_view source_;
};

std::string lines(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ",\n    " : "\n    ") + items[i];
    out += items.empty() ? "]" : "\n  ]";
    return out;
}

}  // namespace

Instance parse_instance(std::string_view text, std::string_view source) {
    InstanceReader reader(text, source);
    Instance inst = reader.read();
    // Canonical order, so that parsing a serialized instance is the identity.
    std::sort(inst.jobs.begin(), inst.jobs.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
    std::sort(inst.prec_edges.begin(), inst.prec_edges.end());
    inst.prec_edges.erase(std::unique(inst.prec_edges.begin(), inst.prec_edges.end()), inst.prec_edges.end());
    try {
        return validate_instance(std::move(inst));
    } catch (const Error& e) {
        // Point at the first line mentioning an id quoted in the message.
        std::string msg = e.what();
        std::size_t line = 1;
        const auto open = msg.find('\'');
        if (open != std::string::npos) {
            const auto close = msg.find('\'', open + 1);
            if (close != std::string::npos) line = reader.locate("\"" + msg.substr(open + 1, close - open - 1) + "\"");
        }
        reader.error(line, msg);
    }
}

std::string serialize_instance(const Instance& inst) {
    std::vector<Job> jobs = inst.jobs;
    std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
    std::vector<std::string> job_lines;
    for (const Job& job : jobs)
        job_lines.push_back(json{{"id", job.id}, {"r", job.release}, {"p", job.processing}, {"d", job.deadline}}.dump());

    auto edges = inst.prec_edges;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::string> edge_lines;
    for (const auto& [from, to] : edges) edge_lines.push_back(json::array({from, to}).dump());

    std::string out = "{\n";
    if (inst.declared_chains) {
        std::vector<std::string> chain_lines;
        for (const auto& chain : *inst.declared_chains) chain_lines.push_back(json(chain).dump());
        out += "  \"chains\": " + lines(chain_lines) + ",\n";
    }
    out += "  \"jobs\": " + lines(job_lines) + ",\n";
    out += std::string("  \"objective\": ") + (inst.objective == Objective::MinMakespan ? "\"cmax\"" : "\"feasible\"") + ",\n";
    out += "  \"prec\": " + lines(edge_lines) + "\n}\n";
    return out;
}

std::string serialize_result(const SolveResult& result, Objective objective, std::optional<double> wall_ms) {
    json doc;
    doc["algorithm"] = result.algorithm;
    doc["feasible"] = result.feasible;
    if (result.lmax) doc["lmax"] = *result.lmax;
    if (result.feasible && objective == Objective::MinMakespan) {
        doc["cmax"] = result.cmax.value_or(0);
        json schedule = json::array();
        if (result.schedule)
            for (const auto& [id, start] : result.schedule->starts) schedule.push_back({{"id", id}, {"start", start}});
        doc["schedule"] = schedule;
    }
    json stats{{"states_explored", result.states_explored}};
    if (wall_ms) stats["wall_ms"] = *wall_ms;
    doc["stats"] = stats;
    return doc.dump(2) + "\n";
}

std::string serialize_stats(const InstanceStats& s) {
    json doc{
        {"n", s.n},
        {"num_window_sizes", s.num_window_sizes},
        {"num_processing_times", s.num_processing_times},
        {"num_job_types", s.num_job_types},
        {"max_slack", s.max_slack},
        {"max_processing", s.max_processing},
        {"max_flexibility", {{"num", s.max_flexibility.num}, {"den", s.max_flexibility.den}, {"value", s.max_flexibility.value()}}},
        {"width", s.width},
        {"min_chain_count", s.min_chain_count},
        {"prec_consistent", s.prec_consistent},
        {"chain_uniform", s.chain_uniform},
        {"proper_level", s.proper_level},
    };
    return doc.dump(2) + "\n";
}

std::string serialize_witness(const ShuffleInstance& si, const ShuffleAnswer& answer) {
    json doc{{"member", answer.member}, {"v", si.v_word}, {"u", si.u_words}};
    if (!answer.reason.empty()) doc["reason"] = answer.reason;
    if (answer.witness) {
        // Reported 1-based, like positions in a word.
        json maps = json::array();
        for (const auto& f : answer.witness->maps) {
            json positions = json::array();
            for (std::size_t x : f) positions.push_back(x + 1);
            maps.push_back(positions);
        }
        doc["witness"] = maps;
    }
    return doc.dump(2) + "\n";
}

}  // namespace rpasched
