#include "ffsim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ffsim/error.hpp"

namespace ffsim {

using json = nlohmann::ordered_json;

const Goal* Scenario::find_goal(const std::string& id) const {
    for (const auto& g : goals) {
        if (g.id == id) return &g;
    }
    return nullptr;
}

int Scenario::total_agents() const {
    int n = 0;
    for (const auto& g : groups) n += g.count;
    return n;
}

bool point_in_any_obstacle(Vec2 p, const std::vector<Obstacle>& obstacles) {
    for (const auto& ob : obstacles) {
        if (point_in_polygon(p, ob.polygon)) return true;
    }
    return false;
}

namespace {

[[noreturn]] void semantic_error(const std::string& msg) {
    throw SimError(Errc::semantic, "scenario: " + msg);
}

double require_number(const json& j, const char* key, double fallback,
                      bool required = false) {
    if (!j.contains(key)) {
        if (required) semantic_error(std::string("missing required field '") + key + "'");
        return fallback;
    }
    if (!j.at(key).is_number()) {
        semantic_error(std::string("field '") + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

Vec2 parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        semantic_error("polygon vertices must be [x, y] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

VisionSource parse_source(const json& j) {
    VisionSource src;
    const std::string kind = j.value("kind", "tower");
    if (kind == "tower") src.kind = VisionSource::Kind::tower;
    else if (kind == "dynamic") src.kind = VisionSource::Kind::dynamic;
    else semantic_error("vision source kind must be 'tower' or 'dynamic'");
    src.active = j.value("active", true);
    if (j.contains("circle")) {
        const auto& c = j.at("circle");
        src.shape = VisionSource::Shape::circle;
        src.center = {require_number(c, "x", 0, true), require_number(c, "y", 0, true)};
        src.radius = require_number(c, "r", 0, true);
        if (src.radius <= 0) semantic_error("vision circle radius must be > 0");
    } else if (j.contains("rect")) {
        const auto& r = j.at("rect");
        src.shape = VisionSource::Shape::rectangle;
        src.bounds = {require_number(r, "x", 0, true), require_number(r, "y", 0, true),
                      require_number(r, "w", 0, true), require_number(r, "h", 0, true)};
        if (src.bounds.w <= 0 || src.bounds.h <= 0) {
            semantic_error("vision rectangle must be non-degenerate");
        }
    } else {
        semantic_error("vision source needs a 'circle' or 'rect' shape");
    }
    return src;
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // nlohmann reports "... at line L, column C ..." in what().
        throw SimError(Errc::syntax, std::string("scenario: ") + e.what());
    }
    if (!doc.is_object()) semantic_error("document root must be an object");

    Scenario s;
    if (!doc.contains("world")) semantic_error("missing required field 'world'");
    const auto& world = doc.at("world");
    s.width = require_number(world, "width", 0, true);
    s.height = require_number(world, "height", 0, true);
    s.cell_size = require_number(world, "cell_size", 2.0);
    s.marker_density = require_number(world, "marker_density", 5.0);
    s.frame_dt = require_number(world, "frame_dt", 0.02);
    s.seed = static_cast<std::uint64_t>(require_number(world, "seed", 1.0));

    for (const auto& jo : doc.value("obstacles", json::array())) {
        Obstacle ob;
        if (!jo.contains("polygon")) semantic_error("obstacle missing 'polygon'");
        for (const auto& jp : jo.at("polygon")) ob.polygon.push_back(parse_point(jp));
        s.obstacles.push_back(std::move(ob));
    }

    for (const auto& jg : doc.value("goals", json::array())) {
        Goal g;
        if (!jg.contains("id") || !jg.at("id").is_string()) {
            semantic_error("goal missing string 'id'");
        }
        g.id = jg.at("id").get<std::string>();
        g.position = {require_number(jg, "x", 0, true), require_number(jg, "y", 0, true)};
        s.goals.push_back(std::move(g));
    }

    for (const auto& jg : doc.value("groups", json::array())) {
        GroupSpec g;
        g.count = static_cast<int>(require_number(jg, "count", 1));
        if (!jg.contains("spawn")) semantic_error("group missing 'spawn' region");
        const auto& sp = jg.at("spawn");
        g.spawn_region = {require_number(sp, "x", 0, true), require_number(sp, "y", 0, true),
                          require_number(sp, "w", 0, true), require_number(sp, "h", 0, true)};
        if (!jg.contains("goal") || !jg.at("goal").is_string()) {
            semantic_error("group missing string 'goal'");
        }
        g.goal_id = jg.at("goal").get<std::string>();
        if (jg.contains("ocean")) {
            const auto& oc = jg.at("ocean");
            OceanVector v;
            v.o = require_number(oc, "o", 0, true);
            v.c = require_number(oc, "c", 0, true);
            v.e = require_number(oc, "e", 0, true);
            v.a = require_number(oc, "a", 0, true);
            v.n = require_number(oc, "n", 0, true);
            g.ocean = v;
        }
        s.groups.push_back(std::move(g));
    }

    if (doc.contains("ff")) {
        const auto& ff = doc.at("ff");
        s.stop_frame = static_cast<int>(require_number(ff, "stop_frame", 600));
        s.target_frame = static_cast<int>(require_number(ff, "target_frame", 1000));
    }

    if (doc.contains("ip")) {
        const auto& ip = doc.at("ip");
        s.ip.k = require_number(ip, "k", s.ip.k);
        s.ip.lambda = require_number(ip, "lambda", s.ip.lambda);
        s.ip.radius = require_number(ip, "radius", s.ip.radius);
    }

    if (doc.contains("fog")) {
        const auto& fog = doc.at("fog");
        s.fog.subdivision = static_cast<int>(require_number(fog, "subdivision", 2));
        for (const auto& js : fog.value("sources", json::array())) {
            s.fog.sources.push_back(parse_source(js));
        }
    }

    validate_scenario(s);
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SimError(Errc::io, "cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

void validate_scenario(const Scenario& s) {
    if (s.width <= 0 || s.height <= 0) semantic_error("world dimensions must be > 0");
    if (s.cell_size <= 0) semantic_error("cell_size must be > 0");
    if (s.marker_density <= 0) semantic_error("marker_density must be > 0");
    if (s.frame_dt <= 0) semantic_error("frame_dt must be > 0");
    if (s.stop_frame < 0) semantic_error("stop_frame must be >= 0");
    if (s.target_frame <= s.stop_frame) {
        semantic_error("target_frame must be > stop_frame");
    }
    for (const auto& ob : s.obstacles) {
        if (ob.polygon.size() < 3) semantic_error("obstacle polygon needs >= 3 vertices");
        if (!polygon_is_simple(ob.polygon)) {
            semantic_error("obstacle polygon must be simple (non-self-intersecting)");
        }
        if (polygon_area(ob.polygon) <= 0) semantic_error("obstacle area must be > 0");
    }
    for (const auto& g : s.goals) {
        if (g.id.empty()) semantic_error("goal id must be non-empty");
        if (g.position.x < 0 || g.position.x > s.width || g.position.y < 0 ||
            g.position.y > s.height) {
            semantic_error("goal '" + g.id + "' lies outside the world bounds");
        }
        if (point_in_any_obstacle(g.position, s.obstacles)) {
            semantic_error("goal '" + g.id + "' lies inside an obstacle");
        }
    }
    for (const auto& g : s.groups) {
        if (g.count < 1) semantic_error("group count must be >= 1");
        if (g.spawn_region.w <= 0 || g.spawn_region.h <= 0) {
            semantic_error("spawn region must have positive size");
        }
        const Rect world{0, 0, s.width, s.height};
        if (!world.contains_rect(g.spawn_region)) {
            semantic_error("spawn region must lie inside the world bounds");
        }
        if (!s.find_goal(g.goal_id)) semantic_error("unknown goal '" + g.goal_id + "'");
        if (g.ocean) {
            const auto& v = *g.ocean;
            for (double t : {v.o, v.c, v.e, v.a, v.n}) {
                if (t < 0.0 || t > 1.0) {
                    semantic_error("OCEAN components must lie in [0, 1]");
                }
            }
        }
    }
    if (s.ip.k <= 0 || s.ip.lambda <= 0 || s.ip.radius <= 0) {
        semantic_error("ip parameters must be > 0");
    }
    if (s.fog.subdivision < 1) semantic_error("fog subdivision must be >= 1");
}

std::string serialize_scenario(const Scenario& s) {
    json doc;
    doc["world"] = {{"width", s.width},       {"height", s.height},
                    {"cell_size", s.cell_size}, {"marker_density", s.marker_density},
                    {"frame_dt", s.frame_dt},   {"seed", static_cast<double>(s.seed)}};
    doc["obstacles"] = json::array();
    for (const auto& ob : s.obstacles) {
        json poly = json::array();
        for (const auto& p : ob.polygon) poly.push_back({p.x, p.y});
        doc["obstacles"].push_back({{"polygon", poly}});
    }
    doc["goals"] = json::array();
    for (const auto& g : s.goals) {
        doc["goals"].push_back({{"id", g.id}, {"x", g.position.x}, {"y", g.position.y}});
    }
    doc["groups"] = json::array();
    for (const auto& g : s.groups) {
        json jg = {{"count", g.count},
                   {"spawn",
                    {{"x", g.spawn_region.x},
                     {"y", g.spawn_region.y},
                     {"w", g.spawn_region.w},
                     {"h", g.spawn_region.h}}},
                   {"goal", g.goal_id}};
        if (g.ocean) {
            jg["ocean"] = {{"o", g.ocean->o},
                           {"c", g.ocean->c},
                           {"e", g.ocean->e},
                           {"a", g.ocean->a},
                           {"n", g.ocean->n}};
        }
        doc["groups"].push_back(jg);
    }
    doc["ff"] = {{"stop_frame", s.stop_frame}, {"target_frame", s.target_frame}};
    doc["ip"] = {{"k", s.ip.k}, {"lambda", s.ip.lambda}, {"radius", s.ip.radius}};
    if (s.fog.subdivision != 2 || !s.fog.sources.empty()) {
        json sources = json::array();
        for (const auto& src : s.fog.sources) {
            json js;
            js["kind"] = src.kind == VisionSource::Kind::tower ? "tower" : "dynamic";
            js["active"] = src.active;
            if (src.shape == VisionSource::Shape::circle) {
                js["circle"] = {{"x", src.center.x}, {"y", src.center.y}, {"r", src.radius}};
            } else {
                js["rect"] = {{"x", src.bounds.x},
                              {"y", src.bounds.y},
                              {"w", src.bounds.w},
                              {"h", src.bounds.h}};
            }
            sources.push_back(js);
        }
        doc["fog"] = {{"subdivision", s.fog.subdivision}, {"sources", sources}};
    }
    return doc.dump(2) + "\n";
}

int Grid::cell_of(Vec2 p) const {
    int cx = static_cast<int>(std::floor(p.x / cell_size));
    int cy = static_cast<int>(std::floor(p.y / cell_size));
    cx = std::clamp(cx, 0, cols - 1);
    cy = std::clamp(cy, 0, rows - 1);
    return cy * cols + cx;
}

Rect Grid::cell_rect(int cx, int cy) const {
    return {cx * cell_size, cy * cell_size, cell_size, cell_size};
}

Rect Grid::cell_rect_clipped(int cx, int cy) const {
    const Rect r = cell_rect(cx, cy);
    const double x1 = std::min(r.x1(), width);
    const double y1 = std::min(r.y1(), height);
    return {r.x, r.y, std::max(0.0, x1 - r.x), std::max(0.0, y1 - r.y)};
}

Vec2 Grid::cell_center(int cx, int cy) const {
    Vec2 c = cell_rect(cx, cy).center();
    constexpr double eps = 1e-3;
    c.x = std::min(c.x, width - eps);
    c.y = std::min(c.y, height - eps);
    return c;
}

int Grid::blocked_count() const {
    int n = 0;
    for (const auto b : blocked) n += b != 0;
    return n;
}

Grid build_grid(const Scenario& s) {
    Grid g;
    g.cell_size = s.cell_size;
    g.width = s.width;
    g.height = s.height;
    g.cols = static_cast<int>(std::ceil(s.width / s.cell_size));
    g.rows = static_cast<int>(std::ceil(s.height / s.cell_size));
    g.blocked.assign(static_cast<size_t>(g.cols) * g.rows, 0);

    constexpr double area_eps = 1e-9;
    for (int cy = 0; cy < g.rows; ++cy) {
        for (int cx = 0; cx < g.cols; ++cx) {
            const Rect cell = g.cell_rect_clipped(cx, cy);
            if (cell.w <= 0 || cell.h <= 0) {
                g.blocked[cy * g.cols + cx] = 1; // fully outside the world
                continue;
            }
            for (const auto& ob : s.obstacles) {
                if (polygon_rect_overlap_area(ob.polygon, cell) > area_eps) {
                    g.blocked[cy * g.cols + cx] = 1;
                    break;
                }
            }
        }
    }
    return g;
}

} // namespace ffsim
