#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "thermopath/grid.hpp"

namespace thermopath {

// Rule for stencil neighbors that fall outside the grid: treat them as 0,
// or substitute the center cell's own value (one-sided difference).
enum class BoundaryPolicy { Zero, OneSided };

struct Scenario {
    int rows = 0;
    int cols = 0;
    PrintPattern pattern;
    TemperatureField initial_temp;
    double temp_lower = 0.0;
    double temp_upper = 0.0;
    double alpha = 0.0;       // thermal diffusivity
    double heat_input = 0.0;  // extruder temperature contribution per print
    BoundaryPolicy boundary_policy = BoundaryPolicy::OneSided;
};

// A scenario document bundles the instance with its planning horizon d.
struct ScenarioDoc {
    Scenario scenario;
    int horizon = 0;
};

class ScenarioError : public std::runtime_error {
public:
    enum class Kind { Parse, Dimension, BoundOrder, Value };

    ScenarioError(Kind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Throws ScenarioError on structural problems; appends non-fatal notes
// (e.g. empty print pattern) to *warnings when provided.
void validate_scenario(const Scenario& s, std::vector<std::string>* warnings = nullptr);

ScenarioDoc load_scenario(const std::string& text, std::vector<std::string>* warnings = nullptr);
std::string save_scenario(const ScenarioDoc& doc);

PrintPattern diagonal_pattern(int n);

bool adjacent(const Cell& a, const Cell& b);

const char* to_string(BoundaryPolicy policy);

}  // namespace thermopath
