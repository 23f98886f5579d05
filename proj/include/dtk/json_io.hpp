#pragma once

#include <json.hpp>

#include <string>

#include "dtk/exact_num.hpp"
#include "dtk/instance.hpp"
#include "dtk/network.hpp"

namespace dtk {

/// Instance document:
///   {"mode":"float"|"exact", "points":[[x,y],...], "root":0,
///    "delta":..., "cost_bound":... (optional)}
/// Exact-mode numbers are strings ("p/q", integers or decimals) or JSON
/// integers; float mode takes JSON numbers (strings are also accepted).
/// Throws ParseError with a distinct message for malformed documents,
/// duplicate points and an out-of-range root.
Instance load_instance(const std::string& text);

/// Canonical form: keys in schema order, exact numbers as reduced "p/q"
/// strings, floats as shortest round-trip JSON numbers, trailing newline.
std::string save_instance(const Instance& instance);

/// {"edges":[[i,j],...]}
Network load_network(const std::string& text, std::size_t n);
std::string save_network(const Network& network);

/// {"parent":{"1":0,"2":0,...}}; the root is the one vertex without an entry.
Tree load_tree(const std::string& text, std::size_t n, Vertex root);
std::string save_tree(const Tree& tree);

/// Float values become JSON numbers. Exact values become "p/q" strings when
/// rational, otherwise {"lo":"p/q","hi":"p/q"} enclosing the value to 2^-bits.
nlohmann::ordered_json number_json(double value);
nlohmann::ordered_json number_json(const ExactNum& value, unsigned bits = 64);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace dtk
