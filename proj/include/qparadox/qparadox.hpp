// Copyright 2026 The qparadox Authors
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

#pragma once

#include "qparadox/codes.hpp"
#include "qparadox/dyadic.hpp"
#include "qparadox/errors.hpp"
#include "qparadox/kochen_specker.hpp"
#include "qparadox/paradoxes.hpp"
#include "qparadox/pauli.hpp"
#include "qparadox/stabilizer.hpp"
#include "qparadox/statevector.hpp"
