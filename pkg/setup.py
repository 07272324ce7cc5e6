import pathlib

from setuptools import find_packages, setup

here = pathlib.Path(__file__).parent.resolve()

with open(here / "runtime.txt", "r") as f:
    runtime = f.read().replace("python-", "")


with open(here / "cliffdiag" / "VERSION") as version_file:
    version = version_file.read().strip()

with open(here / "requirements.txt", "r") as f:
    install_requires = [line.strip() for line in f if line.strip()]

readme_file = here / "README.md"

extras_require = {
    "checks": [
        "tox==3.23.1",
        "mypy==0.812",
        "black==21.5b2",
        "isort==5.8.0",
        "flake8==3.9.2",
        "flake8-bugbear==21.4.3",
        "types-PyYAML==5.4.3",
    ],
    "tests": [
        "pytest==6.2.4",
        "pytest-lazy-fixture==0.6.3",
        "coverage==5.5",
        "hypothesis==6.14.0",
    ],
}

extras_require["dev"] = extras_require["checks"] + extras_require["tests"]

setup(
    name="cliffdiag",
    author="allerter",
    license="MIT",
    description="Exact Clifford hierarchy levels of diagonal qudit gates.",
    long_description=readme_file.read_text(),
    long_description_content_type="text/markdown",
    version=version,
    packages=find_packages(
        exclude=(
            "tests",
            "tests.*",
        )
    ),
    package_data={"cliffdiag": ["VERSION", "data/*.yaml", "data/*.json"]},
    install_requires=install_requires,
    extras_require=extras_require,
    entry_points={"console_scripts": ["cliffdiag=cliffdiag.cli:main"]},
    python_requires=">=" + runtime,
)
