#pragma once

#include <filesystem>
#include <string>

#include "gwdesc/engine.hpp"
#include "gwdesc/fixtures.hpp"
#include "gwdesc/moduli.hpp"
#include "gwdesc/phase_space.hpp"

namespace gwdesc {

// Geometry document; an optional "primary_table" array carries the three-point numbers.
// Throws ValidationError on malformed input.
FixtureModel model_from_json(const std::string& text);
std::string model_to_json(const FixtureModel& fixture);

PrimaryTable primary_table_from_json(const std::string& text, const GeometryModel& model);
std::string primary_table_to_json(const PrimaryTable& table, const GeometryModel& model);

// Records {g, n, psi, lambda, value}.
TautTable taut_table_from_json(const std::string& text);

std::string potential_to_json(const PotentialSeries& potential);
std::string transform_to_json(const GeometryModel& model, const TransformT& t, const TransformT& inverse);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

// "tau(d[,e]):label" tokens separated by commas. Errors name the character offset.
std::vector<Insertion> parse_insertions(std::string_view text, const GeometryModel& model);
// "2" or "1,0".
CurveClass parse_beta(std::string_view text, std::size_t rank);
// "h:3" or "h:1,h2:-1/2" style class.
CohClass parse_class(std::string_view text, const GeometryModel& model);

// Fixture name, or a path to a geometry document.
FixtureModel load_model(const std::string& name_or_path);

} // namespace gwdesc
