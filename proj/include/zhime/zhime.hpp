/*
  Copyright 2026 The zhime Authors

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

#ifndef ZHIME_ZHIME_HPP_
#define ZHIME_ZHIME_HPP_

#include "zhime/bpmf.hpp"
#include "zhime/lexicon.hpp"
#include "zhime/pinyin.hpp"
#include "zhime/radical.hpp"
#include "zhime/session.hpp"
#include "zhime/stroke_codec.hpp"
#include "zhime/syllable.hpp"

#endif  // ZHIME_ZHIME_HPP_
