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

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "zhime/cli.hpp"

#ifndef ZHIME_DATA_DIR
#define ZHIME_DATA_DIR "data"
#endif

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const char* env = std::getenv("ZHIME_DATA_DIR");
  std::vector<std::string> args(argv + 1, argv + argc);
  return zhime::cli::run(std::move(args), std::cin, std::cout, std::cerr,
                         env ? env : ZHIME_DATA_DIR);
}
