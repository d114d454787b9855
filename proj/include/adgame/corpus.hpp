// Copyright 2026 The adgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Bundled models. Each is also shipped as data/corpus/<name>.json.

#ifndef ADGAME_CORPUS_HPP
#define ADGAME_CORPUS_HPP

#include <string>
#include <vector>

#include "adgame/model.hpp"

namespace adgame {

/// Three functional requirements and three scenarios with two general
/// scenarios; the smallest model exercising every relation.
ModelDocument running_example();

/// Four requirements where the higher-paying merge is unstable.
ModelDocument dilemma_fixture();

/// Cafeteria ordering system: 49 functional requirements, 11 scenarios over
/// the default tradeoff matrix and 7 design constraints.
ModelDocument cos_model();

/// "running-example", "dilemma", "non-unique", "cos".
std::vector<std::string> corpus_names();

/// Throws DomainError for unknown names.
ModelDocument corpus_model(const std::string& name);

}  // namespace adgame

#endif  // ADGAME_CORPUS_HPP
