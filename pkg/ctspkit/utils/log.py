#    Copyright 2026 The ctspkit Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.
import logging
import os
import sys

_LOG_LEVEL_ENV_KEY = "CTSPKIT_LOG_LEVEL"


def get_logger():
    """Builds the ctspkit logger"""
    log = logging.getLogger(name="ctspkit")
    formatter = logging.Formatter("%(asctime)s - %(message)s")
    # stdout carries command output
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    level_name = os.environ.get(_LOG_LEVEL_ENV_KEY, "INFO").upper()
    log.setLevel(getattr(logging, level_name, logging.INFO))
    log.addHandler(handler)
    return log


logger = get_logger()
