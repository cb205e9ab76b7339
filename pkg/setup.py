import setuptools

setuptools.setup(
    name="temperedforms",
    version="1.0.0",
    scripts=[
        "temperedforms/temperedforms"
    ],
    author="The temperedforms authors",
    description=("Enumeration and verification of tempered perfect"
                 " forms of prime index on plane lattices"),
    long_description=(
        "Please see README.md"
    ),
    packages=setuptools.find_packages(exclude=["tests"]),
    include_package_data=True,
    package_data={
        "temperedforms.modules.data": ["schema.sql"]
    },
    classifiers=[
        "Programming Language :: Python :: 3"
    ],
    python_requires='>=3.9',
    install_requires=[
        "numpy",
        "pandas >= 1.0",
        "sympy >= 1.7"
    ],
    extras_require={
        "tests": ["pytest"]
    }
)
