#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "ebmin/io.hpp"
#include "ebmin/rng.hpp"

using namespace ebmin;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("format_double round-trips") {
    SplitMix64 rng(64);
    for (int i = 0; i < 200; ++i) {
        const double v = (rng.uniform01() - 0.5) * std::pow(10.0, (int)(rng.next() % 12) - 6);
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("network JSON round-trip is exact") {
    const Network net = generate_dense(20, 7.3, 404);
    const auto path = temp_file("ebmin_net_roundtrip.json");
    save_network(net, path.string());
    const Network back = load_network(path.string());
    REQUIRE(back.size() == net.size());
    CHECK(back.cls == net.cls);
    CHECK(back.area_side == net.area_side);
    for (int i = 0; i < net.size(); ++i) {
        CHECK(back.nodes[i].x == net.nodes[i].x);
        CHECK(back.nodes[i].y == net.nodes[i].y);
    }
    std::filesystem::remove(path);
}

TEST_CASE("network JSON keeps node order with the source first") {
    const nlohmann::json j = network_to_json(generate_regular({4, 1.0, 0.0, PlacementPolicy::center}, 1));
    CHECK(j["class"] == "regular");
    CHECK(j["nodes"][0][0].get<double>() == doctest::Approx(0.5));
    CHECK(j["nodes"][3][0].get<double>() == doctest::Approx(1.5));
}

TEST_CASE("malformed network files are rejected") {
    CHECK_THROWS_AS(network_from_json(nlohmann::json{{"class", "dense"}}), std::invalid_argument);
    CHECK_THROWS_AS(network_from_json(nlohmann::json{
                        {"class", "dense"}, {"areaSide", 1.0}, {"nodes", {{0.0, 0.0}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(network_from_json(nlohmann::json{
                        {"class", "nope"}, {"areaSide", 1.0}, {"nodes", {{0.0, 0.0}, {0.5, 0.5}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(network_from_json(nlohmann::json{
                        {"class", "dense"}, {"areaSide", 1.0}, {"nodes", {{0.0, 0.0}, {3.0, 0.5}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(network_from_json(nlohmann::json{
                        {"class", "dense"}, {"areaSide", -2.0}, {"nodes", {{0.0, 0.0}, {0.5, 0.5}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_network("/nonexistent/ebmin.json"), std::runtime_error);
}

TEST_CASE("trace CSV layout") {
    Network net;
    net.area_side = 2.0;
    net.nodes = {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    const PathLossModel m(3.0, 1.0, 1.0);
    const FloodTrace trace = simulate_flood(net, m, {1.01 * std::numbers::ln2, 0.0, 3});
    std::ostringstream out;
    write_trace_csv(out, net, trace);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == trace_csv_header());
    std::getline(in, line);
    CHECK(line == "0,0,0,0,1,0"); // source row
    std::getline(in, line);
    CHECK(line.rfind("1,1,0,1,,", 0) == 0); // decoded in slot 1, never transmits (eb2 = 0)
    std::getline(in, line);
    CHECK(line.rfind("2,2,0,,,", 0) == 0); // never decodes: empty slots
    CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("bound report JSON fields") {
    Network net;
    net.area_side = 2.0;
    net.nodes = {{0.0, 0.0}, {2.0, 0.0}};
    const PathLossModel m(4.0, 1.0, 1.0);
    const nlohmann::json j = bound_report_to_json(lower_bound_ebn0(net, m, {1}));
    CHECK(j["G"].get<double>() == doctest::Approx(0.0625));
    CHECK(j["lowerBoundEbN0"].get<double>() == doctest::Approx(16.0 * std::numbers::ln2));
    CHECK(j["destinationSetSize"] == 1);
    CHECK(j["argmaxNode"] == 0);
}
