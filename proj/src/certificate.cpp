#include "json.hpp"

#include "fatgraph/lemmas.hpp"

namespace fatgraph {

std::string to_line(const CertificateRecord &r) {
    nlohmann::ordered_json j;
    j["node"] = r.node;
    j["status"] = r.status;
    j["constraint"] = r.constraint;
    j["witness"] = r.witness;
    j["code"] = r.code;
    j["config"] = r.config;
    return j.dump();
}

CertificateRecord parse_record(const std::string &line) {
    auto j = nlohmann::json::parse(line);
    CertificateRecord r;
    r.node = j.at("node").get<std::string>();
    r.status = j.at("status").get<std::string>();
    r.constraint = j.value("constraint", "");
    r.witness = j.value("witness", "");
    r.code = j.value("code", "");
    r.config = j.at("config").get<std::string>();
    return r;
}

} // namespace fatgraph
