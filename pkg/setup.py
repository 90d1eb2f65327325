from setuptools import find_packages, setup


def readme():
    with open("README.md") as f:
        return f.read()


setup(
    name="bucolic",
    use_scm_version=True,
    license="MIT",
    description="Recognition, hulls, covers and decompositions of bucolic graphs and complexes",
    long_description=readme(),
    long_description_content_type="text/markdown",
    keywords="graph theory weakly modular bucolic gated hull universal cover",
    packages=find_packages(exclude=["tests*"]),
    include_package_data=True,
    install_requires=["Django>=2.2", "djangorestframework>=3.9.3", "networkx>=2.6"],
    setup_requires=["setuptools_scm", "setuptools_scm_git_archive"],
    entry_points={"console_scripts": ["bucolic = bucolic.cli:main"]},
    zip_safe=False,
)
