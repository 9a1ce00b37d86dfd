// Copyright 2026 The ospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ospec/backend.h"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ospec/core_text.h"
#include "ospec/error.h"

namespace ospec {

std::vector<AnswerSet> EmbeddedBackend::Solve(const GroundProgram& program,
                                              std::size_t count, bool optimize) {
  return Enumerate(SolveRequest{program, count, optimize});
}

ExternalBackend::Runner ExternalBackend::CommandRunner(std::string command) {
  return [command = std::move(command)](const std::string& text) {
    std::string path =
        (std::filesystem::temp_directory_path() / "ospec-XXXXXX.lp").string();
    int fd = mkstemps(path.data(), 3);
    if (fd < 0) throw Error(Stage::kBackend, "cannot create temporary program file");
    ::close(fd);
    {
      std::ofstream out(path);
      out << text;
      if (!out) {
        std::filesystem::remove(path);
        throw Error(Stage::kBackend, "cannot write " + path);
      }
    }
    std::string full = command + " '" + path + "' 2>/dev/null";
    FILE* pipe = popen(full.c_str(), "r");
    if (pipe == nullptr) {
      std::filesystem::remove(path);
      throw Error(Stage::kBackend, "cannot run solver command: " + command);
    }
    std::string output;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    pclose(pipe);
    std::filesystem::remove(path);
    if (output.empty()) {
      throw Error(Stage::kBackend, "solver command produced no output: " + command);
    }
    return output;
  };
}

std::vector<AnswerSet> ExternalBackend::Solve(const GroundProgram& program,
                                              std::size_t count, bool optimize) {
  CoreText text = EmitCoreText(program, CoreTextOptions{.include_minimize = false});
  std::vector<std::vector<AtomId>> raw = ParseSolverOutput(runner_(text.program), text);

  std::vector<AnswerSet> models;
  std::vector<bool> truth(program.atom_count());
  for (std::vector<AtomId>& atoms : raw) {
    std::fill(truth.begin(), truth.end(), false);
    for (AtomId a : atoms) truth[a] = true;
    if (!IsStableModel(program, truth)) {
      throw Error(Stage::kBackend, "external solver returned a model that is not stable");
    }
    models.push_back(AnswerSet{std::move(atoms), Cost(program, truth)});
  }
  std::sort(models.begin(), models.end(), BitvectorLess);
  models.erase(std::unique(models.begin(), models.end()), models.end());
  if (optimize && program.has_minimize() && !models.empty()) {
    std::int64_t best = models.front().cost;
    for (const AnswerSet& m : models) best = std::min(best, m.cost);
    std::erase_if(models, [&](const AnswerSet& m) { return m.cost != best; });
  }
  if (count > 0 && models.size() > count) models.resize(count);
  return models;
}

}  // namespace ospec
