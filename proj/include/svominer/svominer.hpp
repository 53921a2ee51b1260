// Copyright 2026 The svominer Authors.
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

#pragma once

#include "svominer/chunker.hpp"
#include "svominer/corpus.hpp"
#include "svominer/dot.hpp"
#include "svominer/error.hpp"
#include "svominer/evaluation.hpp"
#include "svominer/miner.hpp"
#include "svominer/normalizer.hpp"
#include "svominer/pipeline.hpp"
#include "svominer/sentencer.hpp"
#include "svominer/stemmer.hpp"
#include "svominer/store.hpp"
#include "svominer/svo.hpp"
#include "svominer/tag_pattern.hpp"
#include "svominer/tagger.hpp"
#include "svominer/tagset.hpp"
#include "svominer/text.hpp"
