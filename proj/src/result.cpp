#include "egt/result.hpp"

#include "egt/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace egt {

nlohmann::json config_to_json(const ExperimentConfig& c) {
    return nlohmann::json{{"operation", c.operation}, {"inputs", c.inputs},
                          {"params", c.params},       {"seed", c.seed},
                          {"trials", c.trials},       {"budget", c.budget},
                          {"out", c.out_path}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.operation = j.at("operation").get<std::string>();
    if (j.contains("inputs")) c.inputs = j.at("inputs").get<std::vector<std::string>>();
    if (j.contains("params"))
        c.params = j.at("params").get<std::map<std::string, std::string>>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) c.trials = j.at("trials").get<long>();
    if (j.contains("budget")) c.budget = j.at("budget").get<std::uint64_t>();
    if (j.contains("out")) c.out_path = j.at("out").get<std::string>();
    return c;
}

std::string record_to_json_line(const ResultRecord& r) {
    nlohmann::json j{{"schema", r.schema},
                     {"operation", r.operation},
                     {"inputs_digest", r.inputs_digest},
                     {"params", r.params},
                     {"outcome", r.outcome},
                     {"payload", r.payload},
                     {"wall_time_s", r.wall_time_s},
                     {"seed", r.seed}};
    return j.dump();
}

std::string digest_bytes(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string digest_files(const std::vector<std::string>& paths) {
    std::string all;
    for (const std::string& p : paths) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw io_error("digest: cannot open " + p);
        std::ostringstream ss;
        ss << in.rdbuf();
        all += p;
        all += '\0';
        all += ss.str();
    }
    return digest_bytes(all);
}

}  // namespace egt
