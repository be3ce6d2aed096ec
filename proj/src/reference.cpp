#include "loem/reference.hpp"

#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

#include "loem_reference_data.hpp"  // generated from data/reference_solutions.json

namespace loem {

namespace {

std::map<int, std::vector<ReferencePoint>> parse_census() {
    const auto doc = nlohmann::json::parse(detail::kReferenceSolutionsJson);
    std::map<int, std::vector<ReferencePoint>> census;
    for (const auto& set : doc.at("sets")) {
        const int n = set.at("n").get<int>();
        std::vector<ReferencePoint> points;
        for (const auto& p : set.at("points")) {
            ReferencePoint rp;
            rp.index = p.at("index").get<int>();
            const auto xs = p.at("x").get<std::vector<double>>();
            const auto us = p.at("u").get<std::vector<double>>();
            rp.coords.x = Eigen::Map<const Eigen::VectorXd>(xs.data(), xs.size());
            rp.coords.u = Eigen::Map<const Eigen::VectorXd>(us.data(), us.size());
            rp.v_tilde = p.at("v_tilde").get<double>();
            points.push_back(std::move(rp));
        }
        census.emplace(n, std::move(points));
    }
    return census;
}

const std::map<int, std::vector<ReferencePoint>>& census() {
    static const std::map<int, std::vector<ReferencePoint>> data = parse_census();
    return data;
}

}  // namespace

const std::vector<ReferencePoint>& reference_census(int n) {
    const auto& data = census();
    const auto it = data.find(n);
    if (it == data.end()) {
        throw unsupported_reference_error("no bundled reference census for n = " +
                                          std::to_string(n));
    }
    return it->second;
}

std::vector<RatioCoordinates> reference_coords(int n) {
    std::vector<RatioCoordinates> out;
    for (const auto& p : reference_census(n)) {
        out.push_back(p.coords);
    }
    return out;
}

bool has_reference_census(int n) {
    return census().count(n) != 0;
}

}  // namespace loem
