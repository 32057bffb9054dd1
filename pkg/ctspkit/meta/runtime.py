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
import getpass
import platform
import sys


def get_python_version() -> str:
    """Returns the current python version"""
    vers = sys.version_info
    return ".".join(str(x) for x in [vers.major, vers.minor, vers.micro])


def get_user() -> str:
    """Returns the user running the experiments"""
    # pylint: disable=broad-except
    try:
        return getpass.getuser()
    except Exception:
        return "unknown"


def get_machine() -> str:
    """Returns the processor and operating system, since benchmark
    wall times only compare across runs on the same machine"""
    return f"{platform.machine()}-{platform.system().lower()}"
