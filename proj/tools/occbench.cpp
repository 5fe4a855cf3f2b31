/* Copyright 2026 The occbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// occbench command-line interface.
//
//   occbench generate --dataset <dir> --tools <dir> --types tool,cutout
//                     --bins low,medium,high --seed <u64> --out <dir>
//   occbench prompts  --manifest <file> [--check]
//   occbench simulate --manifest <file> --archetype <kind> --noise <px>
//                     [--model <id>] --out <dir>
//   occbench evaluate --manifest <file> --preds <dir> --model <id> --out <file>
//   occbench aggregate --records <file>... --out <file>
//   occbench report   --table <file> --format csv|jsonl|markdown [--out <file>]
//   occbench run      --config <file> [overrides]
//   occbench synth    --out <dir> [--count N] [--tools-count N] --seed <u64>
//
// Any subcommand that takes --config reads defaults from the file; flags
// given on the command line override them.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "occbench/occbench.hpp"

namespace {

using namespace occbench;
using namespace occbench::harness;

struct ListFlags {
  std::string types, bins, prompts, formats;
};

struct Options {
  std::string config;
  std::vector<std::string> datasets;
  std::string tools;
  ListFlags lists;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<int> workers;
  std::optional<int> max_attempts;
  bool include_out_of_bin = false;
  std::vector<std::string> models;

  std::string manifest;
  std::string preds;
  std::string model;
  std::string archetype = "occluder_aware";
  int noise = 0;
  bool check = false;
  std::vector<std::string> records;
  std::string table;
  std::string format;
  int count = 64;
  int tools_count = 8;
  int size = 128;
};

// Config file first, then every flag the user actually passed.
RunConfig resolve_config(const Options& o, const CLI::App& cmd) {
  RunConfig c = o.config.empty() ? RunConfig{} : load_config(o.config);
  auto given = [&](const char* name) {
    const auto* opt = cmd.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--dataset")) {
    c.datasets.clear();
    for (const auto& d : o.datasets) c.datasets.emplace_back(d);
  }
  if (given("--tools")) c.tools = o.tools;
  if (given("--types")) c.types = parse_types(split_list(o.lists.types));
  if (given("--bins")) c.bins = parse_bins(split_list(o.lists.bins));
  if (given("--prompts")) c.prompts = parse_prompts(split_list(o.lists.prompts));
  if (given("--format")) {
    c.formats.clear();
    for (const auto& f : split_list(o.lists.formats)) c.formats.push_back(parse_report_format(f));
  }
  if (given("--out")) c.out = o.out;
  if (o.workers) c.workers = *o.workers;
  if (o.max_attempts) c.max_attempts = *o.max_attempts;
  if (given("--include-out-of-bin")) c.include_out_of_bin = o.include_out_of_bin;
  if (given("--model-spec")) {
    c.models.clear();
    for (const auto& m : o.models) c.models.push_back(parse_model_spec(m));
  }
  if (c.workers < 1) throw InvalidInputError("--workers must be >= 1");
  if (c.max_attempts < 1) throw InvalidInputError("--max-attempts must be >= 1");
  return c;
}

void log_split(const SplitResult& s, const fs::path& dir) {
  int ok = 0, skipped = 0, oob = 0;
  for (const auto& [key, c] : s.report.counts) {
    ok += c.success;
    skipped += c.skipped;
    oob += c.out_of_bin;
  }
  std::fprintf(stderr, "%s: %d samples (%d out of bin), %d skipped, %zu ingestion errors -> %s\n",
               s.manifest.dataset.c_str(), ok, oob, skipped, s.report.ingestion_errors.size(),
               dir.string().c_str());
  for (const auto& w : s.warnings) std::fprintf(stderr, "  warning: %s\n", w.c_str());
  for (const auto& e : s.report.ingestion_errors) std::fprintf(stderr, "  error: %s\n", e.c_str());
}

int cmd_generate(const Options& o, const CLI::App& cmd) {
  const auto c = resolve_config(o, cmd);
  if (c.datasets.empty()) throw InvalidInputError("--dataset is required");
  const auto seed = resolve_seed(o.seed, c.seed);
  const auto library = load_tools_for(c);
  for (const auto& dir : c.datasets) {
    const auto ds = ingest_dataset(dir);
    const auto split_dir = c.out / ds.dataset_id;
    log_split(generate_split(ds, library, generation_config(c), seed, split_dir), split_dir);
  }
  return 0;
}

int cmd_prompts(const Options& o, const CLI::App&) {
  const fs::path path(o.manifest);
  auto m = read_manifest(path);
  const auto original = m;
  const auto seed = o.seed.value_or(m.master_seed);
  refresh_prompts(m, path.parent_path(), seed, o.workers.value_or(1));
  if (o.check) {
    int mismatched = 0;
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
      const auto& a = m.entries[i];
      const auto& b = original.entries[i];
      if (a.point != b.point || a.box != b.box) {
        std::fprintf(stderr, "prompt mismatch: %s\n", a.id.c_str());
        ++mismatched;
      }
    }
    std::fprintf(stderr, "%zu entries checked, %d mismatched\n", m.entries.size(), mismatched);
    return mismatched == 0 ? 0 : 1;
  }
  write_manifest(path, m);
  std::fprintf(stderr, "prompts refreshed for %zu entries\n", m.entries.size());
  return 0;
}

int cmd_simulate(const Options& o, const CLI::App& cmd) {
  const auto c = resolve_config(o, cmd);
  const fs::path path(o.manifest);
  const auto m = read_manifest(path);
  ArchetypeSpec spec{parse_archetype(o.archetype), o.noise};
  const auto model = o.model.empty() ? std::string(to_string(spec.kind)) : o.model;
  const fs::path out = cmd.count("--out") ? fs::path(o.out) : path.parent_path() / "predictions";
  const int n = simulate(m, path.parent_path(), out, model, spec, {c.prompts, c.workers});
  std::fprintf(stderr, "%d predictions for model %s -> %s\n", n, model.c_str(), out.string().c_str());
  return 0;
}

int cmd_evaluate(const Options& o, const CLI::App& cmd) {
  const auto c = resolve_config(o, cmd);
  const fs::path path(o.manifest);
  const auto m = read_manifest(path);
  const auto models = split_list(o.model);
  if (models.empty()) throw InvalidInputError("--model is required");
  EvalResult all;
  for (const auto& model : models) {
    auto r = evaluate(m, path.parent_path(), o.preds, model,
                      {c.prompts, c.include_out_of_bin, c.workers});
    all.records.insert(all.records.end(), r.records.begin(), r.records.end());
    all.missing.insert(all.missing.end(), r.missing.begin(), r.missing.end());
    all.errors.insert(all.errors.end(), r.errors.begin(), r.errors.end());
    all.filtered_out_of_bin += r.filtered_out_of_bin;
  }
  const fs::path out = cmd.count("--out") ? fs::path(o.out) : path.parent_path() / "records.jsonl";
  write_records(out, all);
  std::fprintf(stderr, "%zu records, %zu missing predictions, %zu errors, %d out-of-bin skipped -> %s\n",
               all.records.size(), all.missing.size(), all.errors.size(), all.filtered_out_of_bin,
               out.string().c_str());
  for (const auto& e : all.errors) std::fprintf(stderr, "  error: %s\n", e.c_str());
  return 0;
}

int cmd_aggregate(const Options& o, const CLI::App&) {
  EvalResult all;
  for (const auto& r : o.records) read_records(r, all);
  const auto table = aggregate(all);
  write_table(o.out, table);
  std::fprintf(stderr, "%zu rows -> %s\n", table.rows.size(), o.out.c_str());
  return 0;
}

int cmd_report(const Options& o, const CLI::App& cmd) {
  const auto c = resolve_config(o, cmd);
  const auto table = read_table(o.table);
  if (c.formats.size() != 1) throw InvalidInputError("report takes exactly one --format");
  if (cmd.count("--out")) {
    emit_report(table, c.formats.front(), o.out);
  } else {
    std::cout << render_report(table, c.formats.front());
  }
  return 0;
}

int cmd_run(const Options& o, const CLI::App& cmd) {
  const auto c = resolve_config(o, cmd);
  const auto seed = resolve_seed(o.seed, c.seed);
  const auto result = run_pipeline(c, seed);
  for (const auto& s : result.splits) log_split(s, c.out / s.manifest.dataset);
  std::fprintf(stderr, "%zu records, %zu missing, %zu errors; %zu aggregate rows -> %s\n",
               result.eval.records.size(), result.eval.missing.size(), result.eval.errors.size(),
               result.table.rows.size(), c.out.string().c_str());
  return 0;
}

int cmd_synth(const Options& o, const CLI::App&) {
  const auto seed = resolve_seed(o.seed, std::nullopt);
  const fs::path out(o.out);
  SyntheticDatasetSpec spec;
  spec.count = o.count;
  spec.width = spec.height = o.size;
  for (const auto& s : make_synthetic_sources(spec, seed)) write_source(out / "synthetic", s);
  for (const auto& t : make_synthetic_tools(seed, o.tools_count)) write_tool(out / "tools", t);
  std::fprintf(stderr, "%d images -> %s, %d tools -> %s\n", spec.count,
               (out / "synthetic").string().c_str(), o.tools_count, (out / "tools").string().c_str());
  return 0;
}

void add_config(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
}
void add_workers(CLI::App* cmd, Options& o) {
  cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
}
void add_prompts(CLI::App* cmd, Options& o) {
  cmd->add_option("--prompts", o.lists.prompts, "prompt kinds, e.g. point,box");
}
void add_seed(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "master seed (falls back to $OCCBENCH_SEED)");
}
void add_generation(CLI::App* cmd, Options& o) {
  cmd->add_option("--dataset", o.datasets, "dataset root with images/ and masks/");
  cmd->add_option("--tools", o.tools, "tool library directory");
  cmd->add_option("--types", o.lists.types, "occlusion types, e.g. tool,cutout");
  cmd->add_option("--bins", o.lists.bins, "severity bins, e.g. low,medium,high");
  cmd->add_option("--max-attempts", o.max_attempts, "rejection attempts per sample")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"occbench: controlled occlusion benchmark for promptable segmentation"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "generate occluded samples and a manifest");
  add_config(gen, o);
  add_generation(gen, o);
  add_seed(gen, o);
  add_workers(gen, o);
  gen->add_option("--out", o.out, "output directory");

  auto* prm = app.add_subcommand("prompts", "recompute prompts from stored full masks");
  prm->add_option("--manifest", o.manifest, "manifest.jsonl")->required()->check(CLI::ExistingFile);
  prm->add_option("--seed", o.seed, "master seed (defaults to the manifest's)");
  prm->add_flag("--check", o.check, "verify stored prompts instead of rewriting");
  add_workers(prm, o);

  auto* sim = app.add_subcommand("simulate", "write oracle predictions for a manifest");
  add_config(sim, o);
  sim->add_option("--manifest", o.manifest, "manifest.jsonl")->required()->check(CLI::ExistingFile);
  sim->add_option("--archetype", o.archetype,
                  "occluder_aware|occluder_agnostic|perfect_amodal|null|full_box|tool_spill");
  sim->add_option("--noise", o.noise, "max boundary perturbation in pixels")
      ->check(CLI::NonNegativeNumber);
  sim->add_option("--model", o.model, "model id (defaults to the archetype name)");
  sim->add_option("--out", o.out, "prediction directory (default <manifest dir>/predictions)");
  add_prompts(sim, o);
  add_workers(sim, o);

  auto* ev = app.add_subcommand("evaluate", "score predictions against a manifest");
  add_config(ev, o);
  ev->add_option("--manifest", o.manifest, "manifest.jsonl")->required()->check(CLI::ExistingFile);
  ev->add_option("--preds", o.preds, "prediction directory")->required()->check(CLI::ExistingDirectory);
  ev->add_option("--model", o.model, "model id(s), comma separated")->required();
  ev->add_option("--out", o.out, "record file (default <manifest dir>/records.jsonl)");
  ev->add_flag("--include-out-of-bin", o.include_out_of_bin, "score samples flagged out of bin");
  add_prompts(ev, o);
  add_workers(ev, o);

  auto* agg = app.add_subcommand("aggregate", "group records into a table");
  agg->add_option("--records", o.records, "record files")->required()->check(CLI::ExistingFile);
  agg->add_option("--out", o.out, "aggregate table (JSON)")->required();

  auto* rep = app.add_subcommand("report", "render an aggregate table");
  add_config(rep, o);
  rep->add_option("--table", o.table, "aggregate table (JSON)")->required()->check(CLI::ExistingFile);
  rep->add_option("--format", o.lists.formats, "csv|jsonl|markdown");
  rep->add_option("--out", o.out, "output file (default stdout)");

  auto* run = app.add_subcommand("run", "generate, simulate, evaluate, aggregate and report");
  add_config(run, o);
  add_generation(run, o);
  add_seed(run, o);
  add_workers(run, o);
  add_prompts(run, o);
  run->add_option("--out", o.out, "output directory");
  run->add_option("--model-spec", o.models, "id=archetype[:noise], repeatable");
  run->add_option("--format", o.lists.formats, "report formats, e.g. csv,markdown");
  run->add_flag("--include-out-of-bin", o.include_out_of_bin, "score samples flagged out of bin");

  auto* syn = app.add_subcommand("synth", "write a synthetic dataset and tool library");
  syn->add_option("--out", o.out, "output directory")->required();
  syn->add_option("--count", o.count, "number of images")->check(CLI::PositiveNumber);
  syn->add_option("--size", o.size, "image side in pixels")->check(CLI::Range(32, 4096));
  syn->add_option("--tools-count", o.tools_count, "number of tools")->check(CLI::PositiveNumber);
  add_seed(syn, o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_generate(o, *gen);
    if (*prm) return cmd_prompts(o, *prm);
    if (*sim) return cmd_simulate(o, *sim);
    if (*ev) return cmd_evaluate(o, *ev);
    if (*agg) return cmd_aggregate(o, *agg);
    if (*rep) return cmd_report(o, *rep);
    if (*run) return cmd_run(o, *run);
    if (*syn) return cmd_synth(o, *syn);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "occbench: error: %s\n", e.what());
    return 1;
  }
  return 0;
}
