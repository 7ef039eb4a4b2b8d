/*
Copyright 2026 the mra-toolkit authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#ifndef MRA_MRA_HPP
#define MRA_MRA_HPP

#include "mra/cascade.hpp"
#include "mra/core.hpp"
#include "mra/filters.hpp"
#include "mra/fourier.hpp"
#include "mra/io.hpp"
#include "mra/transform.hpp"

#endif  // MRA_MRA_HPP
