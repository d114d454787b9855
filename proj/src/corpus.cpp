// Copyright 2026 The adgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "adgame/corpus.hpp"

#include "adgame/errors.hpp"
#include "adgame/reduction.hpp"
#include "adgame/utility.hpp"

namespace adgame {

ModelDocument running_example() {
  ModelDocument doc;
  auto& p = doc.primitive;
  p.name = "running-example";
  p.requirements = {
      Requirement::functional("f1"),  Requirement::functional("f2"),
      Requirement::functional("f3"),  Requirement::scenario("q1", "g1"),
      Requirement::scenario("q2", "g1"), Requirement::scenario("q3", "g2"),
  };
  p.constraints = {{"c1", {"q1", "q3"}}, {"c2", {"q1"}}};
  p.depends = {{"f1", "f2"}};
  p.derives = {{"q1", "f1"}, {"q1", "f2"}, {"q2", "f1"}, {"q2", "f2"}, {"q3", "f3"}};
  p.tradeoff = TradeoffMatrix({"g1", "g2"}, {{0, 1}, {-1, 0}});
  doc.params = GameParams{0.5, 0.4, 0.1, -0.5, 4, DependencyClosure::kComparable};
  return doc;
}

ModelDocument dilemma_fixture() {
  ModelDocument doc;
  auto& p = doc.primitive;
  p.name = "dilemma";
  // Functional first, as in the model file.
  p.requirements = {
      Requirement::functional("d2"),
      Requirement::functional("d3"),
      Requirement::scenario("d1", "g1"),
      Requirement::scenario("d4", "g4"),
  };
  p.tradeoff = TradeoffMatrix({"g1", "g4"}, {{0, 0}, {-1, 0}});
  // d1 and d4 share nothing, so their relevance is lambda; d3 and d4 as well.
  p.raw_relevance = {
      {"d1", "d2", 0.1},
      {"d1", "d3", 0.1},
      {"d2", "d3", 0.1},
      {"d2", "d4", 0.5},
  };
  doc.params = GameParams{0.4, 0.3, 0.3, -0.7, 3, DependencyClosure::kComparable};
  return doc;
}

ModelDocument cos_model() {
  ModelDocument doc;
  auto& p = doc.primitive;
  p.name = "cos";
  auto f = [&p](const char* id, const char* text) {
    p.requirements.push_back(Requirement::functional(id, text));
  };
  auto s = [&p](const char* id, const char* label, const char* text) {
    p.requirements.push_back(Requirement::scenario(id, label, text));
  };

  f("Order.Place", "Placing a meal order");
  f("Order.Place.Register", "Confirm that the Patron is registered for payroll deduction");
  f("Order.Place.No",
    "If the Patron is not registered for payroll deduction, offer to register now "
    "and continue placing an order");
  f("Order.Place.Date", "Prompt the Patron for the meal date");
  f("Order.Place.Cutoff",
    "If the meal date is today and after the cutoff time, inform the Patron that "
    "it is too late; the Patron can change the meal date or cancel the order");
  f("Order.Deliver", "Delivery or pickup");
  f("Order.Deliver.Select", "The Patron specifies whether the order is picked up or delivered");
  f("Order.Deliver.Location",
    "If the order is delivered and delivery times remain for the meal date, the "
    "Patron provides a valid delivery location");
  f("Order.Deliver.Notimes",
    "Notify the Patron if there are no available delivery times; the Patron cancels "
    "or picks up the order in the cafeteria");
  f("Order.Deliver.Times",
    "Display the remaining delivery times for the meal date and let the Patron "
    "request one of them");
  f("Order.Menu", "Viewing a menu");
  f("Order.Menu.Date", "Display a menu for the date that the Patron specified");
  f("Order.Menu.Available",
    "The menu shows only food items with at least one unit in the cafeteria "
    "inventory that can be delivered");
  f("Order.Units", "Ordering multiple meals and multiple food items");
  f("Order.Units.Multiple", "Permit the user to order multiple identical meals");
  f("Order.Units.TooMany",
    "If the Patron orders more units of an item than the inventory holds, report "
    "the maximum number of units that can be ordered");
  f("Order.Confirm", "Confirming an order");
  f("Order.Confirm.Display",
    "When the Patron wants no more items, display the ordered items, prices and "
    "the payment amount");
  f("Order.Confirm.Prompt", "Prompt the Patron to confirm the meal order");
  f("Order.Confirm.Response", "The Patron can confirm, edit or cancel the order");
  f("Order.Confirm.More", "Let the Patron order additional meals for the same or another date");
  f("Order.Pay", "Meal order payment");
  f("Order.Pay.Method", "When the Patron is done placing orders, ask for a payment method");
  f("Order.Pay.Deliver", "See BR-11");
  f("Order.Pay.Pickup",
    "If the meal is picked up, the Patron pays by payroll deduction or by cash at pickup");
  f("Order.Pay.Deduct", "If the Patron selects payroll deduction, issue a payment request to Payroll");
  f("Order.Pay.OK", "If the payment request is accepted, display a confirmation message");
  f("Order.Pay.NG", "If the payment request is rejected, display the reason");
  f("Order.Done", "Finishing the process after the Patron confirms the order");
  f("Order.Done.Store", "Assign the next available meal order number and store the meal order");
  f("Order.Done.Inventory", "Send a message to the inventory system with the number of units");
  f("Order.Done.Menu",
    "Update the menu for the order date to reflect items now out of stock in the "
    "cafeteria inventory");
  f("Order.Done.Times", "Update the remaining delivery times for the date of this order");
  f("Order.Done.Patron", "Email the Patron the meal order and payment information");
  f("Order.Done.Cafeteria", "Email the Cafeteria Staff the meal order information");
  f("Order.Done.Failure", "If any step of Order.Done fails, roll back the transaction and notify the user");
  f("Order.Retrieve", "Retrieve a previously ordered meal");
  f("UI2", "Provide a help link from each displayed webpage explaining how to use it");
  f("UI3", "The webpages permit complete navigation and food item selection");
  f("SI1.1", "Transmit the quantities of ordered food items to the Cafeteria Inventory System");
  f("SI1.2", "Poll the Inventory System to determine whether a requested item is available");
  f("SI1.3",
    "When the Inventory System reports an item unavailable, remove it from the "
    "menu for the current date");
  f("SI2.1", "Register a Patron for payroll deduction with the Payroll System");
  f("SI2.2", "Unregister a Patron from payroll deduction");
  f("SI2.3", "Check whether a Patron is registered for payroll deduction");
  f("SI2.4", "Submit a payment request for a purchased meal");
  f("SI2.5", "Reverse all or part of a previous charge");
  f("CI1", "Send an email or text message to the Patron confirming order acceptance");
  f("CI2", "Send an email or text message to the Patron reporting any problems");

  s("USE1", "Usability", "Retrieve the previous meal ordered with a single interaction");
  s("USE2", "Usability", "95% of new users order a meal without errors on their first try");
  s("PER1", "Performance",
    "Accommodate 400 users and up to 100 concurrent users at peak usage, average "
    "session 8 minutes");
  s("PER2", "Performance",
    "95% of webpages download completely within 4 seconds over a 20 Mbps connection");
  s("PER3", "Performance",
    "Display confirmation messages within 3 seconds on average and 6 seconds at most");
  s("SEC1", "Security",
    "Network transactions involving financial or personally identifiable "
    "information are encrypted per BR-33");
  s("SEC2", "Security", "Users log on for all operations except viewing a menu");
  s("SEC4", "Security", "Patrons can view only orders that they placed");
  // Safety has no label of its own; allergen visibility is a usability concern.
  s("SAF1", "Usability", "The user can see all ingredients in any item, with allergic reactions");
  s("AVL1", "Availability",
    "Available at least 98% of the time between 5am and midnight and at least 90% "
    "overall, excluding scheduled maintenance");
  // Robustness has no label of its own; order recovery keeps the service available.
  s("ROB1", "Availability",
    "If the connection breaks before a new order is confirmed or terminated, the "
    "user can recover the incomplete order");

  p.constraints = {
      // Inference: the order store and order history live in the database.
      {"CO-2", {"Order.Done.Store", "Order.Retrieve"}},
      // Inference: the requirements about webpages.
      {"CO-3", {"UI2", "UI3"}},
      // Inference: the requirements dealing with delivery times.
      {"BR-2", {"Order.Deliver.Times", "Order.Deliver.Notimes"}},
      // Inference: the delivery location of an order.
      {"BR-3", {"Order.Deliver.Location"}},
      // "prompt the Patron for the meal date (See BR-8)"; the cutoff rule
      // constrains the same date.
      {"BR-8", {"Order.Place.Date", "Order.Place.Cutoff"}},
      // "Order.Pay.Deliver: See BR-11"; BR-11 forces payroll deduction.
      {"BR-11", {"Order.Pay.Deliver", "Order.Pay.Deduct"}},
      // "encrypted per BR-33"; the payroll payment request carries financial data.
      {"BR-33", {"SEC1", "Order.Pay.Deduct"}},
  };

  p.depends = {
      // Sub-requirements depend on their parent feature.
      {"Order.Place.Register", "Order.Place"},
      {"Order.Place.No", "Order.Place.Register"},
      {"Order.Place.Date", "Order.Place"},
      {"Order.Place.Cutoff", "Order.Place.Date"},
      {"Order.Deliver.Select", "Order.Deliver"},
      {"Order.Deliver.Location", "Order.Deliver"},
      {"Order.Deliver.Notimes", "Order.Deliver"},
      {"Order.Deliver.Times", "Order.Deliver"},
      {"Order.Menu.Date", "Order.Menu"},
      {"Order.Menu.Available", "Order.Menu"},
      {"Order.Units.Multiple", "Order.Units"},
      {"Order.Units.TooMany", "Order.Units"},
      {"Order.Confirm.Display", "Order.Confirm"},
      {"Order.Confirm.Prompt", "Order.Confirm"},
      {"Order.Confirm.Response", "Order.Confirm"},
      {"Order.Confirm.More", "Order.Confirm"},
      {"Order.Pay.Method", "Order.Pay"},
      {"Order.Pay.Deliver", "Order.Pay"},
      {"Order.Pay.Pickup", "Order.Pay"},
      {"Order.Pay.Deduct", "Order.Pay"},
      {"Order.Pay.OK", "Order.Pay"},
      {"Order.Pay.NG", "Order.Pay"},
      {"Order.Done.Store", "Order.Done"},
      {"Order.Done.Inventory", "Order.Done"},
      {"Order.Done.Menu", "Order.Done"},
      {"Order.Done.Times", "Order.Done"},
      {"Order.Done.Patron", "Order.Done"},
      {"Order.Done.Cafeteria", "Order.Done"},
      {"Order.Done.Failure", "Order.Done"},
      // "a menu for the date that the Patron specified"
      {"Order.Menu.Date", "Order.Place.Date"},
      // "Order.Pay.OK/NG: if the payment request is accepted/rejected"
      {"Order.Pay.OK", "Order.Pay.Deduct"},
      {"Order.Pay.NG", "Order.Pay.Deduct"},
      // "after the Patron confirms the order"
      {"Order.Done", "Order.Confirm.Response"},
      // Inference: each step of Order.Done goes through an external interface.
      {"Order.Done.Inventory", "SI1.1"},
      {"Order.Done.Patron", "CI1"},
      {"Order.Done.Failure", "CI2"},
      // Inference: availability checks poll the inventory system.
      {"Order.Menu.Available", "SI1.2"},
      {"Order.Units.TooMany", "SI1.2"},
      {"SI1.3", "Order.Menu.Date"},
      // Inference: payroll registration and payment go through the payroll system.
      {"Order.Place.Register", "SI2.3"},
      {"Order.Place.No", "SI2.1"},
      {"Order.Pay.Deduct", "SI2.4"},
      {"SI2.5", "Order.Pay.Deduct"},
      {"SI2.2", "SI2.1"},
  };

  p.derives = {
      // "SEC1 -> Order.Pay.Deduct": payroll requests carry financial information.
      {"SEC1", "Order.Pay.Deduct"},
      // "retrieve the previous meal ordered with a single interaction"
      {"USE1", "Order.Retrieve"},
      // "view only orders that they placed"
      {"SEC4", "Order.Retrieve"},
      // "log on for all operations"
      {"SEC2", "Order.Place.Register"},
      // Inference: first-try ordering needs help links and full navigation.
      {"USE2", "UI2"},
      {"USE2", "UI3"},
      // "display confirmation messages"
      {"PER3", "Order.Pay.OK"},
      {"PER3", "Order.Confirm.Prompt"},
      // Inference: the menu page is the page most often generated.
      {"PER2", "Order.Menu.Date"},
      // "see all ingredients in any items"
      {"SAF1", "Order.Menu.Date"},
      // "recover an incomplete order" before it is confirmed.
      {"ROB1", "Order.Confirm.Response"},
  };

  p.tradeoff = default_tradeoff_matrix();
  doc.params = GameParams{0.4, 0.3, 0.3, -1.3, 3, DependencyClosure::kComparable};
  return doc;
}

std::vector<std::string> corpus_names() {
  return {"running-example", "dilemma", "non-unique", "cos"};
}

ModelDocument corpus_model(const std::string& name) {
  if (name == "running-example") return running_example();
  if (name == "dilemma") return dilemma_fixture();
  if (name == "non-unique") return prop1_fixture();
  if (name == "cos") return cos_model();
  throw DomainError("unknown corpus model '" + name + "'");
}

}  // namespace adgame
