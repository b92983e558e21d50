#include "ffsim/harness.hpp"

#include <filesystem>
#include <fstream>

#include "ffsim/error.hpp"

namespace ffsim {

namespace {

Obstacle rect_obstacle(double x, double y, double w, double h) {
    return {{{x, y}, {x + w, y}, {x + w, y + h}, {x, y + h}}};
}

// The three-obstacle 30x30 arrangement: two slabs astride the diagonal routes
// plus one non-rectangular polygon in the upper-left quadrant.
std::vector<Obstacle> thirty_world_obstacles() {
    return {
        rect_obstacle(10.0, 6.0, 4.0, 7.0),
        rect_obstacle(16.0, 17.0, 8.0, 3.0),
        Obstacle{{{6.0, 18.0}, {11.0, 22.0}, {6.0, 25.0}}},
    };
}

Scenario thirty_world_base() {
    Scenario s;
    s.width = 30.0;
    s.height = 30.0;
    s.stop_frame = 600;
    s.target_frame = 1000;
    s.goals = {{"g1", {28.0, 28.0}}, {"g2", {28.0, 3.0}}};
    return s;
}

// Table-style four-scenario family over the 30x30 world. Group A spawns at
// the bottom-left corner; group B (two-goal runs) spawns at the top-left so
// the groups cross mid-world inside the 600..1000 jump window.
Scenario table1_scenario(int sim, bool with_obstacles) {
    Scenario s = thirty_world_base();
    if (with_obstacles) s.obstacles = thirty_world_obstacles();
    const Rect spawn_a{1.0, 1.0, 5.0, 5.0};
    const Rect spawn_b{1.0, 23.0, 5.0, 5.0};
    switch (sim) {
        case 1: s.groups = {{1, spawn_a, "g1", {}}}; break;
        case 2: s.groups = {{5, spawn_a, "g1", {}}}; break;
        case 3: s.groups = {{5, spawn_a, "g1", {}}, {5, spawn_b, "g2", {}}}; break;
        case 4: s.groups = {{10, spawn_a, "g1", {}}, {10, spawn_b, "g2", {}}}; break;
        default: throw SimError(Errc::semantic, "table1 sim index out of range");
    }
    return s;
}

// Personality variations on the two-group obstacle scenario.
Scenario ocean_scenario(const OceanVector& ocean) {
    Scenario s = table1_scenario(3, true);
    for (auto& g : s.groups) g.ocean = ocean;
    return s;
}

// 40x23 comparison world: two opposing streams crossing horizontally.
Scenario compare_scenario_horizontal(int agents, std::vector<Obstacle> obstacles) {
    Scenario s;
    s.width = 40.0;
    s.height = 23.0;
    s.stop_frame = 200;
    s.target_frame = 400;
    s.obstacles = std::move(obstacles);
    s.goals = {{"east", {38.5, 11.5}}, {"west", {1.5, 11.5}}};
    s.groups = {{agents / 2, Rect{0.5, 4.0, 2.0, 15.0}, "east", {}},
                {agents - agents / 2, Rect{37.5, 4.0, 2.0, 15.0}, "west", {}}};
    return s;
}

// 40x23 four-obstacle world: four streams from the cardinal extremities cross
// at a central intersection. Block areas total 582.22 m^2.
Scenario compare_scenario_cross(int agents) {
    Scenario s;
    s.width = 40.0;
    s.height = 23.0;
    s.stop_frame = 200;
    s.target_frame = 370;
    const double top_w = 141.11 / 9.0; // two 9 m tall blocks, 141.11 m^2 each
    s.obstacles = {
        rect_obstacle(3.0, 0.0, 15.0, 10.0),
        rect_obstacle(22.0, 0.0, 15.0, 10.0),
        rect_obstacle(18.0 - top_w, 13.0, top_w, 9.0),
        rect_obstacle(22.0, 13.0, top_w, 9.0),
    };
    s.goals = {{"north", {20.0, 22.5}},
               {"south", {20.0, 0.5}},
               {"east", {39.0, 11.0}},
               {"west", {1.0, 11.0}}};
    const int q = agents / 4;
    s.groups = {{q, Rect{19.0, 0.3, 2.0, 1.4}, "north", {}},
                {q, Rect{19.0, 21.3, 2.0, 1.4}, "south", {}},
                {q, Rect{0.3, 9.0, 2.2, 4.0}, "east", {}},
                {agents - 3 * q, Rect{37.5, 9.0, 2.2, 4.0}, "west", {}}};
    return s;
}

std::vector<Obstacle> compare_two_obstacles() {
    // 2 obstacles, 109.71 m^2 total.
    return {rect_obstacle(9.0, 12.0, 12.19, 4.5), rect_obstacle(19.0, 6.5, 12.19, 4.5)};
}

std::vector<Obstacle> compare_seven_obstacles() {
    // 7 obstacles, 128.68 m^2 total: six 3x6 pillars and one 4 x 5.17 block.
    return {
        rect_obstacle(8.0, 2.0, 3.0, 6.0),   rect_obstacle(8.0, 15.0, 3.0, 6.0),
        rect_obstacle(15.0, 8.5, 3.0, 6.0),  rect_obstacle(22.0, 2.0, 3.0, 6.0),
        rect_obstacle(22.0, 15.0, 3.0, 6.0), rect_obstacle(29.0, 8.5, 3.0, 6.0),
        rect_obstacle(12.5, 16.0, 4.0, 5.17),
    };
}

// Fog-of-war demo: one agent crossing bottom-to-top around a central block,
// one circular and one rectangular watch tower along the detour.
Scenario fog_scenario() {
    Scenario s;
    s.width = 30.0;
    s.height = 30.0;
    s.stop_frame = 100;
    s.target_frame = 3500;
    s.obstacles = {rect_obstacle(10.0, 12.0, 6.0, 4.0)};
    s.goals = {{"top", {15.0, 28.0}}};
    s.groups = {{1, Rect{14.0, 1.0, 2.0, 2.0}, "top", {}}};
    s.fog.subdivision = 2;
    VisionSource circle;
    circle.kind = VisionSource::Kind::tower;
    circle.shape = VisionSource::Shape::circle;
    circle.center = {17.0, 14.0};
    circle.radius = 2.0;
    VisionSource square;
    square.kind = VisionSource::Kind::tower;
    square.shape = VisionSource::Shape::rectangle;
    square.bounds = {14.0, 22.0, 4.0, 4.0};
    s.fog.sources = {circle, square};
    return s;
}

} // namespace

std::map<std::string, Scenario> presets() {
    std::map<std::string, Scenario> all;
    const OceanVector ocean_rows[4] = {
        {0.5, 0.5, 0.8, 0.5, 0.8}, // leadership test
        {0.5, 0.5, 0.2, 0.5, 0.8}, // without leadership
        {0.5, 0.8, 0.2, 0.8, 0.5}, // low impatience by the formulas
        {0.5, 0.2, 0.8, 0.2, 0.5}, // high impatience by the formulas
    };
    for (int sim = 1; sim <= 4; ++sim) {
        all["table1_sim" + std::to_string(sim)] = table1_scenario(sim, false);
        all["table1_sim" + std::to_string(sim) + "_obs"] = table1_scenario(sim, true);
        all["ocean_sim" + std::to_string(sim)] = ocean_scenario(ocean_rows[sim - 1]);
    }
    for (const int n : {8, 80, 160}) {
        const std::string suffix = "_" + std::to_string(n);
        all["compare_none" + suffix] = compare_scenario_horizontal(n, {});
        all["compare_2obs" + suffix] = compare_scenario_horizontal(n, compare_two_obstacles());
        all["compare_7obs" + suffix] = compare_scenario_horizontal(n, compare_seven_obstacles());
        all["compare_4obs" + suffix] = compare_scenario_cross(n);
    }
    all["fog_demo"] = fog_scenario();
    for (auto& [name, scenario] : all) validate_scenario(scenario);
    return all;
}

std::vector<std::string> write_presets(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::vector<std::string> names;
    for (const auto& [name, scenario] : presets()) {
        const std::string file = name + ".json";
        std::ofstream out(fs::path(dir) / file);
        if (!out) throw SimError(Errc::io, "cannot write preset: " + file);
        out << serialize_scenario(scenario);
        names.push_back(file);
    }
    return names;
}

} // namespace ffsim
