// Copyright 2026 The goqec Authors
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

#ifndef GOQEC_GOQEC_HPP_
#define GOQEC_GOQEC_HPP_

#include "goqec/channels.hpp"
#include "goqec/conditions.hpp"
#include "goqec/hilbert.hpp"
#include "goqec/linalg.hpp"
#include "goqec/recovery.hpp"
#include "goqec/states.hpp"
#include "goqec/version.hpp"

#endif  // GOQEC_GOQEC_HPP_
