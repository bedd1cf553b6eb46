#pragma once

#include <string>

#include <json.hpp>

#include "a3d/oracle.hpp"
#include "a3d/parse.hpp"

namespace a3d {

/// {query, delta, field, samples, verdict, error_bound, certificate?}
inline nlohmann::json verdict_json(const std::string& query, const Multidegree& delta, const std::string& field,
                                   const Verdict& v, std::uint64_t seed) {
  nlohmann::json j;
  j["query"] = query;
  j["delta"] = delta.entries();
  j["field"] = field;
  j["seed"] = seed;
  j["samples"] = v.samples;
  j["candidates"] = v.candidates;
  j["verdict"] = v.decomposable ? "decomposable" : "indecomposable";
  j["error_bound"] = v.error_bound;
  if (!v.certificate.empty()) {
    nlohmann::json cert = nlohmann::json::array();
    for (const auto& [m, c] : v.certificate) cert.push_back({{"product", format_monomial(m)}, {"coefficient", c}});
    j["certificate"] = cert;
  }
  return j;
}

}  // namespace a3d
