#include "wetpaper/report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace wetpaper {

std::string report_to_json(const EmbedReport& report, int indent) {
  nlohmann::ordered_json doc;
  doc["N_A"] = report.areas;
  doc["N_FP"] = report.flippable;
  doc["N_E"] = report.embedded;
  doc["leftover_pixels"] = report.leftover_pixels;
  auto& areas = doc["areas"] = nlohmann::ordered_json::array();
  for (const AreaRecord& r : report.per_area) {
    areas.push_back({{"area", r.area}, {"k", r.k}, {"q_p", r.q_p}, {"flips", r.flips}});
  }
  return doc.dump(indent);
}

EmbedReport report_from_json(std::string_view json) {
  try {
    const auto doc = nlohmann::json::parse(json);
    EmbedReport report;
    report.areas = doc.at("N_A").get<std::size_t>();
    report.flippable = doc.at("N_FP").get<std::size_t>();
    report.embedded = doc.at("N_E").get<std::size_t>();
    report.leftover_pixels = doc.at("leftover_pixels").get<std::size_t>();
    for (const auto& r : doc.at("areas")) {
      report.per_area.push_back({r.at("area").get<std::size_t>(), r.at("k").get<std::size_t>(),
                                 r.at("q_p").get<std::size_t>(), r.at("flips").get<std::size_t>()});
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("embed report: ") + e.what());
  }
}

}  // namespace wetpaper
