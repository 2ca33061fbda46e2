#pragma once

#include <charconv>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>

#include <json.hpp>

#include "ebmin/flood.hpp"
#include "ebmin/radius.hpp"
#include "ebmin/topology.hpp"

namespace ebmin {

// shortest round-trip decimal form; keeps CSV output byte-stable
inline std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

// Network file format: {"class": str, "areaSide": number, "nodes": [[x,y],...]}
// with node order preserved and the source first.
inline nlohmann::json network_to_json(const Network& net) {
    nlohmann::json j;
    j["class"] = to_string(net.cls);
    j["areaSide"] = net.area_side;
    nlohmann::json nodes = nlohmann::json::array();
    for (const Vec2& p : net.nodes) nodes.push_back({p.x, p.y});
    j["nodes"] = std::move(nodes);
    return j;
}

inline Network network_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("class") || !j.contains("areaSide") || !j.contains("nodes"))
        throw std::invalid_argument("network file needs class, areaSide and nodes");
    Network net;
    net.cls = network_class_from_string(j.at("class").get<std::string>());
    net.area_side = j.at("areaSide").get<double>();
    if (!(net.area_side > 0.0))
        throw std::invalid_argument("network file: areaSide must be positive");
    const auto& nodes = j.at("nodes");
    if (!nodes.is_array() || nodes.size() < 2)
        throw std::invalid_argument("network file: need at least two nodes");
    const double slack = 1e-9 * std::max(1.0, net.area_side);
    net.nodes.reserve(nodes.size());
    for (const auto& entry : nodes) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("network file: each node must be an [x, y] pair");
        Vec2 p{entry[0].get<double>(), entry[1].get<double>()};
        if (p.x < -slack || p.y < -slack || p.x > net.area_side + slack || p.y > net.area_side + slack)
            throw std::invalid_argument("network file: node outside [0, areaSide]^2");
        net.nodes.push_back(p);
    }
    return net;
}

inline void save_network(const Network& net, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << network_to_json(net).dump(2) << '\n';
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

inline Network load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open network file: " + path);
    nlohmann::json j;
    in >> j;
    return network_from_json(j);
}

inline nlohmann::json bound_report_to_json(const BoundReport& rep) {
    return nlohmann::json{{"G", rep.effective_radius},
                          {"lowerBoundEbN0", rep.lower_bound_ebn0},
                          {"destinationSetSize", rep.destination_count},
                          {"argmaxNode", rep.argmax_node}};
}

inline const char* trace_csv_header() {
    return "nodeIndex,x,y,decodeSlot,transmitSlot,accumEnergy";
}

// per-node trace rows; node indices are 0-based with the source at 0, empty
// fields mean "never"
inline void write_trace_csv(std::ostream& out, const Network& net, const FloodTrace& trace) {
    out << trace_csv_header() << '\n';
    for (int i = 0; i < net.size(); ++i) {
        out << i << ',' << format_double(net.nodes[i].x) << ',' << format_double(net.nodes[i].y)
            << ',';
        if (trace.decode_slot[i]) out << *trace.decode_slot[i];
        out << ',';
        if (trace.transmit_slot[i]) out << *trace.transmit_slot[i];
        out << ',' << format_double(trace.accum_energy[i]) << '\n';
    }
}

} // namespace ebmin
