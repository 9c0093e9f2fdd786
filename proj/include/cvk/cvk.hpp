// Copyright 2026 The cvkernels Authors
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

#include "cvk/fock.hpp"
#include "cvk/geometry.hpp"
#include "cvk/io.hpp"
#include "cvk/kernels.hpp"
#include "cvk/learning.hpp"
#include "cvk/oracle.hpp"
#include "cvk/states.hpp"
#include "cvk/types.hpp"
