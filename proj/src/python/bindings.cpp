#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ffsim/error.hpp"
#include "ffsim/fog.hpp"
#include "ffsim/harness.hpp"

namespace py = pybind11;
using namespace ffsim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Crowd simulation engine with fast-forward jumps, OCEAN "
              "personalities and fog-of-war suspension";

    py::register_exception<SimError>(m, "SimError");

    py::class_<Vec2>(m, "Vec2")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Vec2::x)
        .def_readwrite("y", &Vec2::y)
        .def("length", &Vec2::length)
        .def("__repr__", [](const Vec2& v) {
            return "Vec2(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
        });

    py::class_<Rect>(m, "Rect")
        .def(py::init<>())
        .def(py::init<double, double, double, double>(), py::arg("x"), py::arg("y"),
             py::arg("w"), py::arg("h"))
        .def_readwrite("x", &Rect::x)
        .def_readwrite("y", &Rect::y)
        .def_readwrite("w", &Rect::w)
        .def_readwrite("h", &Rect::h);

    py::class_<OceanVector>(m, "OceanVector")
        .def(py::init<>())
        .def(py::init([](double o, double c, double e, double a, double n) {
                 return OceanVector{o, c, e, a, n};
             }),
             py::arg("o"), py::arg("c"), py::arg("e"), py::arg("a"), py::arg("n"))
        .def_readwrite("o", &OceanVector::o)
        .def_readwrite("c", &OceanVector::c)
        .def_readwrite("e", &OceanVector::e)
        .def_readwrite("a", &OceanVector::a)
        .def_readwrite("n", &OceanVector::n);

    py::class_<IpParams>(m, "IpParams")
        .def(py::init<>())
        .def_readwrite("k", &IpParams::k)
        .def_readwrite("lam", &IpParams::lambda)
        .def_readwrite("radius", &IpParams::radius);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("width", &Scenario::width)
        .def_readwrite("height", &Scenario::height)
        .def_readwrite("cell_size", &Scenario::cell_size)
        .def_readwrite("marker_density", &Scenario::marker_density)
        .def_readwrite("frame_dt", &Scenario::frame_dt)
        .def_readwrite("seed", &Scenario::seed)
        .def_readwrite("stop_frame", &Scenario::stop_frame)
        .def_readwrite("target_frame", &Scenario::target_frame)
        .def_readwrite("ip", &Scenario::ip)
        .def("total_agents", &Scenario::total_agents);

    py::class_<Grid>(m, "Grid")
        .def_readonly("cols", &Grid::cols)
        .def_readonly("rows", &Grid::rows)
        .def_readonly("cell_size", &Grid::cell_size)
        .def("is_blocked", &Grid::is_blocked, py::arg("cx"), py::arg("cy"))
        .def("blocked_count", &Grid::blocked_count);

    py::class_<Path>(m, "Path")
        .def(py::init(&Path::from_points), py::arg("points"))
        .def_property_readonly("waypoints", &Path::waypoints)
        .def_property_readonly("cumulative_length", &Path::cumulative_length)
        .def("length", &Path::length)
        .def("point_at_distance", &Path::point_at_distance, py::arg("d"))
        .def("advanced_to", &Path::advanced_to, py::arg("position"), py::arg("tol") = 1e-6)
        .def("distance_to", &Path::distance_to, py::arg("point"))
        .def("__len__", &Path::size);

    m.def("parse_scenario", &parse_scenario, py::arg("text"));
    m.def("load_scenario_file", &load_scenario_file, py::arg("path"));
    m.def("serialize_scenario", &serialize_scenario, py::arg("scenario"));
    m.def("build_grid", &build_grid, py::arg("scenario"));
    m.def("plan_path", &plan_path, py::arg("grid"), py::arg("start"), py::arg("goal"));

    m.def("walking_speed", &walking_speed, py::arg("ocean"));
    m.def("leadership", &leadership, py::arg("ocean"));
    m.def("impatience", &impatience, py::arg("ocean"));
    m.def("cohesion_radius", &cohesion_radius, py::arg("cohesion"));
    m.def("ip_multiplier", &ip_multiplier, py::arg("neighbor_count"), py::arg("params"));

    py::enum_<AgentState>(m, "AgentState")
        .value("active", AgentState::active)
        .value("suspended", AgentState::suspended)
        .value("arrived", AgentState::arrived);

    py::class_<Agent>(m, "Agent")
        .def_readonly("id", &Agent::id)
        .def_readonly("group_id", &Agent::group_id)
        .def_readonly("position", &Agent::position)
        .def_readonly("velocity", &Agent::velocity)
        .def_readonly("max_speed", &Agent::max_speed)
        .def_readonly("personal_radius", &Agent::personal_radius)
        .def_readonly("goal", &Agent::goal)
        .def_readonly("path", &Agent::path)
        .def_readonly("state", &Agent::state)
        .def("speed", &Agent::speed);

    py::class_<SimState>(m, "SimState")
        .def_readonly("frame", &SimState::frame)
        .def_readonly("agents", &SimState::agents)
        .def_readonly("steps_executed", &SimState::steps_executed)
        .def("all_arrived", &SimState::all_arrived)
        .def("active_count", &SimState::active_count)
        .def("marker_positions",
             [](const SimState& s) { return s.marker_field.markers; })
        .def("marker_owners", [](const SimState& s) { return s.marker_field.owner; });

    py::enum_<RunOutcome>(m, "RunOutcome")
        .value("all_arrived", RunOutcome::all_arrived)
        .value("frame_limit", RunOutcome::frame_limit);

    m.def("init_state", &init_state, py::arg("scenario"));
    m.def("step", &step, py::arg("state"));
    m.def("run_until_frame", &run_until_frame, py::arg("state"), py::arg("frame"));
    m.def("run_until_arrived", &run_until_arrived, py::arg("state"), py::arg("frame_limit"));
    m.def("positions_of", &positions_of, py::arg("state"));

    py::class_<JumpRecord>(m, "JumpRecord")
        .def_readonly("agent_id", &JumpRecord::agent_id)
        .def_readonly("pos_t", &JumpRecord::pos_t)
        .def_readonly("pdr_estimate", &JumpRecord::pdr_estimate)
        .def_readonly("ip", &JumpRecord::ip)
        .def_readonly("magnitude", &JumpRecord::magnitude)
        .def_readonly("pos_projected", &JumpRecord::pos_projected);

    m.def(
        "fast_forward",
        [](SimState& state, int stop_frame, int target_frame) {
            return fast_forward(state, {stop_frame, target_frame});
        },
        py::arg("state"), py::arg("stop_frame"), py::arg("target_frame"));

    m.def("avg_error", &avg_error, py::arg("bc_positions"), py::arg("ffa_positions"));
    m.def(
        "relative_dif",
        [](const PositionMap& bc_t, const PositionMap& bc_target, const PositionMap& ffa_target) {
            const DifResult r = relative_dif(bc_t, bc_target, ffa_target);
            return py::make_tuple(r.mean, r.per_agent, r.degenerate_agents);
        },
        py::arg("bc_t"), py::arg("bc_target"), py::arg("ffa_target"));

    py::class_<RunStats>(m, "RunStats")
        .def_readonly("total_time", &RunStats::total_time)
        .def_readonly("avg_speed", &RunStats::avg_speed)
        .def_readonly("avg_ang_var", &RunStats::avg_ang_var)
        .def_readonly("avg_dist", &RunStats::avg_dist)
        .def_readonly("frames_simulated", &RunStats::frames_simulated);

    py::class_<CompareOutcome>(m, "CompareOutcome")
        .def_readonly("continuous_stats", &CompareOutcome::continuous_stats)
        .def_readonly("ffa_stats", &CompareOutcome::ffa_stats)
        .def_readonly("avg_error_m", &CompareOutcome::avg_error_m)
        .def_readonly("mean_dif", &CompareOutcome::mean_dif)
        .def_readonly("jumps", &CompareOutcome::jumps);

    m.def("run_compare", &run_compare, py::arg("scenario"), py::arg("seed"),
          py::arg("run_to_completion") = false, py::arg("frame_limit") = 60000);
    m.def("presets", &presets);
    m.def("write_presets", &write_presets, py::arg("dir"));

    py::class_<FogEvent>(m, "FogEvent")
        .def_readonly("frame", &FogEvent::frame)
        .def_readonly("agent_id", &FogEvent::agent_id)
        .def_readonly("event", &FogEvent::event)
        .def_readonly("position", &FogEvent::position)
        .def_readonly("fog_cell", &FogEvent::fog_cell);

    py::class_<FogSim>(m, "FogSim")
        .def(py::init([](const Scenario& scenario) {
                 return FogSim(init_state(scenario), scenario.fog.subdivision,
                               scenario.fog.sources);
             }),
             py::arg("scenario"))
        .def("step_frame", &FogSim::step_frame)
        .def("run_to_target", &FogSim::run_to_target)
        .def_property_readonly("events", &FogSim::events)
        .def_property_readonly("state", [](const FogSim& f) { return f.state(); });

    m.attr("__version__") = "0.1.0";
}
