// Python bindings for the core operations: graphs and kernels, the two graph
// problems with their local searches, deceptive leading blocks with the
// hillclimber, both EA loops, and the experiment harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "evo/bitstring.hpp"
#include "evo/dlb.hpp"
#include "evo/ea.hpp"
#include "evo/graph.hpp"
#include "evo/harness.hpp"
#include "evo/parallel.hpp"
#include "evo/problem.hpp"

namespace py = pybind11;
using namespace evo;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Memetic (mu+lambda) evolutionary algorithms on graphs and "
              "deceptive-leading-blocks runtime scaling";

    py::class_<Rng>(m, "Rng")
        .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
        .def("__repr__", [](const Rng&) { return "<evo.Rng>"; });

    m.def("derive_seed", &derive_seed, py::arg("root"), py::arg("index"));

    py::class_<BitString>(m, "BitString")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def_static("zeros", &BitString::zeros, py::arg("n"))
        .def_static("ones", &BitString::ones, py::arg("n"))
        .def_static("random", &BitString::random, py::arg("n"), py::arg("rng"))
        .def_static("from_string", &BitString::from_string, py::arg("bits"))
        .def("__len__", &BitString::size)
        .def("__getitem__",
             [](const BitString& b, std::size_t i) {
                 if (i >= b.size()) {
                     throw py::index_error();
                 }
                 return b.get(i);
             })
        .def("get", &BitString::get, py::arg("i"))
        .def("set", &BitString::set, py::arg("i"), py::arg("value"))
        .def("flip", &BitString::flip, py::arg("i"))
        .def("popcount", &BitString::popcount)
        .def("complemented", &BitString::complemented)
        .def_static("hamming", &BitString::hamming, py::arg("a"), py::arg("b"))
        .def("to_string", &BitString::to_string)
        .def("__eq__", [](const BitString& a, const BitString& b) { return a == b; })
        .def("__hash__", [](const BitString& b) { return BitStringHash{}(b); })
        .def("__repr__",
             [](const BitString& b) { return "BitString('" + b.to_string() + "')"; });

    py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
        .def_static(
            "from_edge_list",
            [](Vertex n, const std::vector<Edge>& edges) {
                return Graph::from_edge_list(n, edges);
            },
            py::arg("n"), py::arg("edges"))
        .def_static("gen_er", &Graph::gen_er, py::arg("n"), py::arg("p"), py::arg("seed"))
        .def_static("gen_ba", &Graph::gen_ba, py::arg("n"), py::arg("m"), py::arg("seed"))
        .def_static("read_edge_list",
                    py::overload_cast<const std::filesystem::path&>(&Graph::read_edge_list),
                    py::arg("path"))
        .def("write_edge_list",
             py::overload_cast<const std::filesystem::path&>(&Graph::write_edge_list, py::const_),
             py::arg("path"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("neighbors",
             [](const Graph& g, Vertex v) {
                 auto span = g.neighbors(v);
                 return std::vector<Vertex>(span.begin(), span.end());
             },
             py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("edges", &Graph::edges)
        .def("internal_edges", &Graph::internal_edges, py::arg("x"))
        .def("cut_value", &Graph::cut_value, py::arg("x"))
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) +
                   ", m=" + std::to_string(g.num_edges()) + ")";
        });

    py::class_<LocalSearchResult>(m, "LocalSearchResult")
        .def_readonly("point", &LocalSearchResult::point)
        .def_readonly("steps", &LocalSearchResult::steps);

    py::class_<Problem, std::shared_ptr<Problem>>(m, "Problem")
        .def_property_readonly("dimension", &Problem::dimension)
        .def("evaluate", &Problem::evaluate, py::arg("x"))
        .def("local_search", &Problem::local_search, py::arg("x"), py::arg("rng"))
        .def_property_readonly("name", [](const Problem& p) { return std::string(p.name()); });

    py::class_<MisProblem, Problem, std::shared_ptr<MisProblem>>(m, "MisProblem")
        .def(py::init<std::shared_ptr<const Graph>>(), py::arg("graph"))
        .def("violation_count", &MisProblem::violation_count, py::arg("x"), py::arg("v"))
        .def("repair", &MisProblem::repair, py::arg("x"), py::arg("rng"));

    py::class_<McProblem, Problem, std::shared_ptr<McProblem>>(m, "McProblem")
        .def(py::init<std::shared_ptr<const Graph>>(), py::arg("graph"));

    py::class_<DlbProblem>(m, "DlbProblem")
        .def(py::init<std::size_t, std::size_t>(), py::arg("n"), py::arg("k"))
        .def_property_readonly("dimension", &DlbProblem::dimension)
        .def_property_readonly("block_length", &DlbProblem::block_length)
        .def_property_readonly("num_blocks", &DlbProblem::num_blocks)
        .def("critical_block", &DlbProblem::critical_block, py::arg("x"))
        .def("value", &DlbProblem::value, py::arg("x"));

    py::class_<LsResult>(m, "LsResult")
        .def_readonly("result", &LsResult::result)
        .def_readonly("ls_iterations", &LsResult::ls_iterations)
        .def_readonly("neighbor_evals", &LsResult::neighbor_evals);

    m.def("hillclimb", &hillclimb, py::arg("problem"), py::arg("x"), py::arg("rng"));
    m.def("baldwin_value", &baldwin_value, py::arg("problem"), py::arg("x"), py::arg("rng"));

    py::enum_<EvolutionKind>(m, "EvolutionKind")
        .value("Darwinian", EvolutionKind::Darwinian)
        .value("Baldwinian", EvolutionKind::Baldwinian)
        .value("Lamarckian", EvolutionKind::Lamarckian)
        .value("LB", EvolutionKind::LB);

    py::class_<EvolutionType>(m, "EvolutionType")
        .def_static("darwinian", &EvolutionType::darwinian)
        .def_static("baldwinian", &EvolutionType::baldwinian)
        .def_static("lamarckian", &EvolutionType::lamarckian)
        .def_static("lb", &EvolutionType::lb, py::arg("p_lb"))
        .def_readwrite("kind", &EvolutionType::kind)
        .def_readwrite("p_lb", &EvolutionType::p_lb)
        .def_static("parse_kind", &EvolutionType::parse_kind, py::arg("name"))
        .def("__repr__", [](const EvolutionType& t) { return "EvolutionType(" + t.name() + ")"; });

    py::class_<EAConfig>(m, "EAConfig")
        .def(py::init<>())
        .def_readwrite("mu", &EAConfig::mu)
        .def_readwrite("lambda_", &EAConfig::lambda)
        .def_readwrite("crossover_rate", &EAConfig::crossover_rate)
        .def_readwrite("mutation_rate", &EAConfig::mutation_rate)
        .def_readwrite("evolution", &EAConfig::evolution)
        .def_readwrite("budget", &EAConfig::budget)
        .def_readwrite("seed", &EAConfig::seed);

    py::class_<EvalCounter>(m, "EvalCounter")
        .def_readonly("offspring_evals", &EvalCounter::offspring_evals)
        .def_readonly("ls_neighbor_evals", &EvalCounter::ls_neighbor_evals)
        .def_readonly("ls_iterations", &EvalCounter::ls_iterations);

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("best_fitness", &RunRecord::best_fitness)
        .def_readonly("best_genotype", &RunRecord::best_genotype)
        .def_readonly("convergence", &RunRecord::convergence)
        .def_readonly("diversity", &RunRecord::diversity)
        .def_readonly("unique_optima", &RunRecord::unique_optima)
        .def_readonly("counters", &RunRecord::counters)
        .def_readonly("generations", &RunRecord::generations)
        .def_readonly("wall_time_s", &RunRecord::wall_time_s);

    m.def("uniform_crossover", &uniform_crossover, py::arg("a"), py::arg("b"), py::arg("rng"));
    m.def("bernoulli_mutation", &bernoulli_mutation, py::arg("x"), py::arg("rate"), py::arg("rng"));
    m.def(
        "run_mu_plus_lambda",
        [](const EAConfig& cfg, const Problem& problem) {
            py::gil_scoped_release release;
            return run_mu_plus_lambda(cfg, problem);
        },
        py::arg("config"), py::arg("problem"));

    py::class_<OnePlusOneResult>(m, "OnePlusOneResult")
        .def_readonly("iterations", &OnePlusOneResult::iterations)
        .def_readonly("counters", &OnePlusOneResult::counters)
        .def_readonly("success", &OnePlusOneResult::success)
        .def_readonly("fitness_monotone", &OnePlusOneResult::fitness_monotone);

    m.def(
        "run_one_plus_one",
        [](const DlbProblem& p, EvolutionKind evolution, std::uint64_t seed,
           std::uint64_t max_iterations, const std::optional<BitString>& initial) {
            py::gil_scoped_release release;
            return run_one_plus_one(p, evolution, seed, max_iterations, initial);
        },
        py::arg("problem"), py::arg("evolution"), py::arg("seed"), py::arg("max_iterations"),
        py::arg("initial") = std::nullopt);

    m.def("population_diversity", [](const std::vector<BitString>& genotypes) {
        Population pop;
        pop.reserve(genotypes.size());
        for (const auto& g : genotypes) {
            pop.push_back({g, 0.0});
        }
        return population_diversity(pop);
    });

    py::class_<AggregateScore>(m, "AggregateScore")
        .def_readonly("mean", &AggregateScore::mean)
        .def_readonly("mean_std", &AggregateScore::mean_std);
    m.def("aggregate_scores", &aggregate_scores, py::arg("per_graph_scores"));

    py::class_<FitResult>(m, "FitResult")
        .def_readonly("slope", &FitResult::slope)
        .def_readonly("stderr", &FitResult::stderr_);
    m.def(
        "fit_exponent",
        [](const std::vector<double>& ns, const std::vector<double>& means) {
            return fit_exponent(ns, means);
        },
        py::arg("ns"), py::arg("means"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("mu_values", &GridSpec::mu_values)
        .def_readwrite("lambda_values", &GridSpec::lambda_values)
        .def_readwrite("rc_values", &GridSpec::rc_values)
        .def_readwrite("plb_values", &GridSpec::plb_values);

    py::class_<GridCell>(m, "GridCell")
        .def_readonly("evolution", &GridCell::evolution)
        .def_readonly("mu", &GridCell::mu)
        .def_readonly("lambda_", &GridCell::lambda)
        .def_readonly("rc", &GridCell::rc)
        .def_readonly("plb", &GridCell::plb);
    m.def("enumerate_grid", &enumerate_grid, py::arg("spec"), py::arg("types"));

    py::class_<GridRow>(m, "GridRow")
        .def_readonly("cell", &GridRow::cell)
        .def_readonly("graph_id", &GridRow::graph_id)
        .def_readonly("seed", &GridRow::seed)
        .def_readonly("best_fitness", &GridRow::best_fitness)
        .def_readonly("offspring_evals", &GridRow::offspring_evals)
        .def_readonly("ls_neighbor_evals", &GridRow::ls_neighbor_evals)
        .def_readonly("wall_time_s", &GridRow::wall_time_s);
    py::class_<GridBest>(m, "GridBest")
        .def_readonly("cell", &GridBest::cell)
        .def_readonly("mean_best", &GridBest::mean_best);
    py::class_<GridReport>(m, "GridReport")
        .def_readonly("rows", &GridReport::rows)
        .def_readonly("best", &GridReport::best);
    m.def(
        "grid_search",
        [](const GridSpec& spec, const std::vector<EvolutionKind>& types,
           const std::string& problem, const std::vector<std::shared_ptr<const Graph>>& graphs,
           const std::vector<std::string>& graph_ids, const std::vector<std::uint64_t>& seeds,
           std::uint64_t budget, unsigned threads) {
            py::gil_scoped_release release;
            return grid_search(spec, types, problem, graphs, graph_ids, seeds, budget, threads);
        },
        py::arg("spec"), py::arg("types"), py::arg("problem"), py::arg("graphs"),
        py::arg("graph_ids"), py::arg("seeds"), py::arg("budget") = 40000,
        py::arg("threads") = 1);

    py::class_<ScalingRun>(m, "ScalingRun")
        .def_readonly("evolution", &ScalingRun::evolution)
        .def_readonly("k", &ScalingRun::k)
        .def_readonly("n", &ScalingRun::n)
        .def_readonly("rep", &ScalingRun::rep)
        .def_readonly("iterations", &ScalingRun::iterations)
        .def_readonly("ls_iterations", &ScalingRun::ls_iterations)
        .def_readonly("neighbor_evals", &ScalingRun::neighbor_evals)
        .def_readonly("success", &ScalingRun::success);
    py::class_<ScalingPoint>(m, "ScalingPoint")
        .def_readonly("n", &ScalingPoint::n)
        .def_readonly("mean_iterations", &ScalingPoint::mean_iterations)
        .def_readonly("stderr_iterations", &ScalingPoint::stderr_iterations)
        .def_readonly("mean_pessimistic_evals", &ScalingPoint::mean_pessimistic_evals)
        .def_readonly("reps", &ScalingPoint::reps);
    py::class_<ScalingSeries>(m, "ScalingSeries")
        .def_readonly("evolution", &ScalingSeries::evolution)
        .def_readonly("points", &ScalingSeries::points)
        .def_readonly("slope", &ScalingSeries::slope)
        .def_readonly("slope_stderr", &ScalingSeries::slope_stderr);
    py::class_<ScalingReport>(m, "ScalingReport")
        .def_readonly("k", &ScalingReport::k)
        .def_readonly("runs", &ScalingReport::runs)
        .def_readonly("series", &ScalingReport::series)
        .def_readonly("all_success", &ScalingReport::all_success)
        .def_readonly("all_monotone", &ScalingReport::all_monotone);
    m.def(
        "dlb_scaling_experiment",
        [](std::size_t k, const std::vector<std::size_t>& ns, std::uint64_t repetitions,
           const std::vector<EvolutionKind>& types, std::uint64_t seed,
           std::uint64_t max_iterations, unsigned threads) {
            py::gil_scoped_release release;
            return dlb_scaling_experiment(k, ns, repetitions, types, seed, max_iterations,
                                          threads);
        },
        py::arg("k"), py::arg("ns"), py::arg("repetitions"), py::arg("types"), py::arg("seed") = 0,
        py::arg("max_iterations") = 1000000000ULL, py::arg("threads") = 1);

    m.def("write_grid_csv",
          [](const std::filesystem::path& p, const std::vector<GridRow>& rows) {
              write_grid_csv(p, rows);
          });
    m.def("read_grid_csv",
          [](const std::filesystem::path& p) { return read_grid_csv(p); });
    m.def("write_scaling_csv",
          [](const std::filesystem::path& p, const std::vector<ScalingRun>& runs) {
              write_scaling_csv(p, runs);
          });
    m.def("read_scaling_csv",
          [](const std::filesystem::path& p) { return read_scaling_csv(p); });

    py::register_exception<Error>(m, "EvoError", PyExc_ValueError);
}
