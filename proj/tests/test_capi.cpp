// Exercises the shared-library interface exactly as an external client
// would: through submax.h only.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <string>

#include "submax/submax.h"

namespace {
std::string g_data_dir = "data";
}

TEST_CASE("graph loading and error reporting") {
  submax_graph* graph = nullptr;
  CHECK(submax_graph_load("no_such_file.txt", &graph) == SUBMAX_ERR_IO);
  CHECK(std::strlen(submax_last_error()) > 0);

  const std::string path = g_data_dir + "/toy_star.txt";
  REQUIRE(submax_graph_load(path.c_str(), &graph) == SUBMAX_OK);
  CHECK(submax_graph_nodes(graph) == 4);
  CHECK(submax_graph_edges(graph) == 3);
  submax_graph_free(graph);
}

TEST_CASE("oracle handles and single runs") {
  const std::string path = g_data_dir + "/toy_star.txt";
  submax_graph* graph = nullptr;
  REQUIRE(submax_graph_load(path.c_str(), &graph) == SUBMAX_OK);
  submax_oracle* oracle = nullptr;
  REQUIRE(submax_oracle_max_cover(graph, &oracle) == SUBMAX_OK);
  CHECK(submax_oracle_ground_size(oracle) == 4);

  submax_run_spec spec{};
  spec.algorithm = "greedy";
  spec.k = 1;
  spec.c = 1;
  spec.eps = 0.1;

  submax_run_stats stats{};
  int solution[4] = {-1, -1, -1, -1};
  REQUIRE(submax_run(oracle, &spec, &stats, solution, 4) == SUBMAX_OK);
  CHECK(stats.objective_value == 4.0);
  CHECK(stats.solution_size == 1);
  CHECK(solution[0] == 0);  // the star's center

  spec.algorithm = "qs";
  spec.k = 2;
  REQUIRE(submax_run(oracle, &spec, &stats, solution, 4) == SUBMAX_OK);
  CHECK(stats.queries <= 5);
  CHECK(stats.passes == 1);

  spec.algorithm = "qslargek";
  spec.k = 2;  // below 8c/e
  CHECK(submax_run(oracle, &spec, &stats, solution, 4) == SUBMAX_ERR_USAGE);

  spec.algorithm = "nope";
  CHECK(submax_run(oracle, &spec, &stats, solution, 4) == SUBMAX_ERR_USAGE);

  submax_oracle_free(oracle);
  submax_graph_free(graph);
}

TEST_CASE("revenue and adversarial oracles through the C surface") {
  const std::string path = g_data_dir + "/sample_graph.txt";
  submax_graph* graph = nullptr;
  REQUIRE(submax_graph_load(path.c_str(), &graph) == SUBMAX_OK);

  submax_oracle* revenue = nullptr;
  REQUIRE(submax_oracle_revenue(graph, 7, &revenue) == SUBMAX_OK);
  submax_run_spec spec{};
  spec.algorithm = "ltl";
  spec.k = 5;
  spec.c = 1;
  spec.eps = 0.1;
  spec.seed = 3;
  submax_run_stats a{};
  submax_run_stats b{};
  REQUIRE(submax_run(revenue, &spec, &a, nullptr, 0) == SUBMAX_OK);
  REQUIRE(submax_run(revenue, &spec, &b, nullptr, 0) == SUBMAX_OK);
  CHECK(a.objective_value == b.objective_value);  // seeded determinism
  submax_oracle_free(revenue);
  submax_graph_free(graph);

  submax_oracle* adversarial = nullptr;
  CHECK(submax_oracle_adversarial(100, 1, 3, -1, &adversarial) == SUBMAX_ERR_USAGE);
  REQUIRE(submax_oracle_adversarial(100, 2, 3, 17, &adversarial) == SUBMAX_OK);
  submax_oracle_free(adversarial);
}

TEST_CASE("experiments, rows, and CSV output") {
  const std::string path = g_data_dir + "/sample_graph.txt";
  submax_experiment_spec spec{};
  spec.algorithm = "qs";
  spec.objective = "maxcover";
  spec.graph_path = path.c_str();
  spec.k = 5;
  spec.c = 1;
  spec.eps = 0.1;

  submax_rows* rows = nullptr;
  REQUIRE(submax_experiment_run(&spec, &rows) == SUBMAX_OK);
  CHECK(submax_rows_count(rows) == 1);

  char line[512];
  REQUIRE(submax_rows_line(rows, -1, line, sizeof(line)) == SUBMAX_OK);
  CHECK(std::strstr(line, "algorithm,n,k,c,eps") == line);
  REQUIRE(submax_rows_line(rows, 0, line, sizeof(line)) == SUBMAX_OK);
  CHECK(std::strstr(line, "qs,60,5,1,") == line);
  CHECK(submax_rows_line(rows, 5, line, sizeof(line)) == SUBMAX_ERR_USAGE);
  char tiny[4];
  CHECK(submax_rows_line(rows, 0, tiny, sizeof(tiny)) == SUBMAX_ERR_USAGE);

  const char* csv_path = "tmp_capi_rows.csv";
  std::remove(csv_path);
  REQUIRE(submax_rows_write_csv(rows, csv_path) == SUBMAX_OK);
  REQUIRE(submax_rows_write_csv(rows, csv_path) == SUBMAX_OK);
  FILE* f = std::fopen(csv_path, "r");
  REQUIRE(f != nullptr);
  int lines = 0;
  char buf[512];
  while (std::fgets(buf, sizeof(buf), f) != nullptr) ++lines;
  std::fclose(f);
  CHECK(lines == 3);  // header written once, two appended rows
  std::remove(csv_path);
  submax_rows_free(rows);

  spec.algorithm = "qsingleton";
  spec.k = 2;  // invalid pairing
  CHECK(submax_experiment_run(&spec, &rows) == SUBMAX_ERR_USAGE);
}

TEST_CASE("hidden-element experiment through the C surface") {
  submax_adversarial_report report{};
  submax_rows* rows = nullptr;
  REQUIRE(submax_adversarial_trials("qs", 2000, 2, 5, 50, 9, &report, &rows) == SUBMAX_OK);
  CHECK(report.trials == 50);
  CHECK(submax_rows_count(rows) == 50);
  CHECK(report.rate >= 0.0);
  CHECK(report.rate <= 1.0);
  submax_rows_free(rows);
}

int main(int argc, char** argv) {
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_data_dir = argv[argc - 1];
    --argc;
  }
  doctest::Context context(argc, argv);
  return context.run();
}
