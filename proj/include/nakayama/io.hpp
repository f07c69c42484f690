#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nakayama/algebra.hpp"
#include "nakayama/ext_nat.hpp"
#include "nakayama/filtration.hpp"
#include "nakayama/invariants.hpp"
#include "nakayama/module.hpp"
#include "nakayama/verifier.hpp"

namespace nakayama::io {

using Json = nlohmann::ordered_json;

/// Comma separated integers, tolerant of spaces and surrounding parentheses.
std::vector<int> parse_int_list(std::string_view text);

/// "5,5,6,6,6", "kupisch:5,5,6,6,6" or "rel:8:3x2,5x2,8x3". Without an explicit kind a
/// series ending in 1 (other than a single entry) is read as linear.
Algebra parse_algebra(std::string_view text, std::optional<Kind> kind = std::nullopt);

/// "8:3x2,5x2,8x3", with or without the "rel:" prefix.
RelationSystem parse_relations(std::string_view text);

/// "t,l".
Module parse_module(std::string_view text);

Kind parse_kind(std::string_view text);

/// Accepts an algebra document or a relation document.
Algebra algebra_from_json(const Json& doc);
RelationSystem relations_from_json(const Json& doc);

/// Reads a file holding a JSON document or a text shorthand.
Algebra load_algebra(const std::string& path);
RelationSystem load_relations(const std::string& path);

Json to_json(ExtNat x);
Json to_json(const Algebra& algebra);
Json to_json(const RelationSystem& system);
Json to_json(Module m);

std::string arc_label(Module m);  ///< "t:l"
std::string module_label(const Algebra& algebra, Module m);  ///< "t:l [S_t..S_soc]"

Json report_json(const InvariantReport& report, const std::optional<EpsilonChain>& chain);
std::string report_table(const InvariantReport& report, const std::optional<EpsilonChain>& chain);

/// One row per level of the epsilon chain, starting with the algebra itself.
struct ChainRow {
    int level = 0;
    std::vector<Algebra> components;
    std::optional<FiltrationData> filtration;  ///< present for cyclic rows
    ExtNat phi_dim;
};

std::vector<ChainRow> chain_rows(const Algebra& algebra, int max_steps);
Json chain_json(const std::vector<ChainRow>& rows);
std::string chain_table(const std::vector<ChainRow>& rows);

/// Step n holds the n-th syzygy (or cosyzygy) together with the cover (or envelope)
/// of step n - 1. A projective (injective) input has an empty listing.
struct ResolutionStep {
    int step = 0;
    std::optional<Module> module;  ///< nullopt for zero or a cycle
    std::optional<int> cycle_at;   ///< earlier step whose module reappears here
    Module cover;
};

std::vector<ResolutionStep> resolution(const Algebra& algebra, Module m, Direction dir, int max_steps);
Json resolution_json(const std::vector<ResolutionStep>& steps, Direction dir);
std::string resolution_table(const Algebra& algebra, Module m, const std::vector<ResolutionStep>& steps,
                             Direction dir);

Json verify_json(const VerificationReport& report);
std::string verify_table(const VerificationReport& report);

/// Pretty JSON with a trailing newline.
std::string dump(const Json& doc);

}  // namespace nakayama::io
