# Copyright 2026 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import setuptools

name = "premetric-cobweb"
description = "Exact premetric spaces, cobwebs and their towers"
version = "0.1.0"
release_status = "Development Status :: 3 - Alpha"

with open("README.md", "r") as fh:
    long_description = fh.read()

dependencies = [
    "fsspec>=2024.9.0",
    "jellyfish>=1.1.0",
    "networkx>=3.1",
    "numpy>=1.24",
    "pandas>=2.0.3",
    "parsy>=2.1",
    "PyYAML>=6.0.2",
    "tabulate>=0.9.0",
]

packages = [
    "premetric_cobweb",
    "premetric_cobweb.result_handlers",
]

setuptools.setup(
    name=name,
    description=description,
    version=version,
    author="PSO DVT Engineering team",
    author_email="data-validator-eng@google.com",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=packages,
    classifiers=[
        release_status,
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
    install_requires=dependencies,
    entry_points={
        "console_scripts": [
            "premetric-cobweb=premetric_cobweb.__main__:main",
        ]
    },
)
