#pragma once

#include "rr1/bounds.hpp"
#include "rr1/contour.hpp"
#include "rr1/field.hpp"
#include "rr1/toeplitz.hpp"

#include <string>
#include <vector>

namespace rr1 {

// JSON documents (std::string payloads end with a newline):
//   ScalarField   {"grid":{...},"which":"ratio","values":[[...]],"degenerate":[[i,j],...]}
//   ContourSet    {"level":x,"polylines":[[[re,im],...],...]}
//   Profile       {"lambda":[re,im],"sigma_second":x,"raw":[...],"normalized":[...]}
//   Splitting     {"z":[re,im],"winding":k,"sizes":[...],"sing3":[[...],...],
//                  "decay_rate":x,"floor":x}

std::string field_to_json(const ScalarField& field);
ScalarField field_from_json(const std::string& text);

/// One "re,im,value" line per node, row-major (imaginary axis outer).
std::string field_to_csv(const ScalarField& field);

std::string contours_to_json(const ContourSet& contours);
std::string contour_list_to_json(const std::vector<ContourSet>& sets);
ContourSet contours_from_json(const std::string& text);

std::string profile_to_json(const OrthogonalityProfile& profile);
std::string splitting_to_json(const SplittingReport& report);
std::string relation_to_json(const std::vector<RelationDiskInfo>& disks);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace rr1
