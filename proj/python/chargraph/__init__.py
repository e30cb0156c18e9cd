# Copyright 2026 The chargraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Character degree graphs: construction, duke partitions, screening."""

from chargraph._core import (
    ChargraphError,
    PrimeGraph,
    bipartition_or_odd_cycle,
    build_graph,
    check_distance3_domination,
    complement,
    components,
    diameter,
    distance,
    factorize,
    find_duke,
    induced,
    is_complete,
    parse_dot,
    parse_record,
    prime_power,
    prime_set,
    psl2_crosscheck,
    psl2_degrees,
    psl2_graph,
    run_cli,
    screen,
    synthesize_duke,
    validate_report,
    verify_corpus,
    verify_duke,
    witness_partition,
)

__version__ = "0.1.0"
